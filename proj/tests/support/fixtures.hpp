#pragma once

#include <sstream>
#include <string>

#include "eoc/link_stream.hpp"

namespace eoc::testing {

// Three vertices over t = 1..5, u-v-t order. "2 1 5" repeats "1 2 5".
inline const char* const f1_text =
    "1 2 1\n"
    "1 2 2\n"
    "1 3 2\n"
    "2 3 2\n"
    "1 2 4\n"
    "1 3 4\n"
    "1 2 5\n"
    "2 1 5\n"
    "2 3 5\n";

// Δ = 4, γ = 2, split at 12. Before 12: {1,2} [2,11], {2,3} [4,13],
// {3,4} [1,9]. After: {1,2} [12,21], {1,3} [11,20], {1,2,3} [12,20].
// Across the split: {3,4} [8,16]. Pair (1,4) only pins the time range.
inline const char* const split_text =
    "1 4 1\n"
    "1 2 2\n"
    "3 4 3\n"
    "2 3 4\n"
    "3 4 5\n"
    "1 2 6\n"
    "1 2 7\n"
    "1 2 8\n"
    "2 3 8\n"
    "3 4 8\n"
    "2 3 9\n"
    "1 3 11\n"
    "2 3 12\n"
    "3 4 12\n"
    "1 2 13\n"
    "3 4 13\n"
    "1 3 15\n"
    "1 2 16\n"
    "1 3 16\n"
    "2 3 16\n"
    "1 2 17\n"
    "1 3 17\n"
    "2 3 17\n"
    "1 2 18\n"
    "1 4 21\n";

inline LinkStream parse_text(const std::string& text, FormatSpec spec = {}) {
  std::istringstream in(text);
  return parse_links(in, spec);
}

inline LinkStream f1() { return parse_text(f1_text); }
inline LinkStream split_fixture() { return parse_text(split_text); }

}  // namespace eoc::testing
