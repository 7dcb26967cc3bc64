#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eoc/clique.hpp"
#include "eoc/enumerate.hpp"
#include "eoc/link_stream.hpp"

namespace eoc {

// Everything carried from one update cycle to the next.
struct BatchState {
  Params params;
  Timestamp t_start = 0;                // left edge of the observation window
  std::optional<Timestamp> boundary;    // last processed boundary; empty before cycle 1
  KeySet maximal;                       // maximal cliques over the links seen so far
  CliqueMap frontier;                   // cliques with span.end >= boundary
  LinkList link_tail;                   // links in [boundary - Δ, boundary]

  static BatchState initial(const Params& p, Timestamp t_start);

  friend bool operator==(const BatchState& a, const BatchState& b);
};

struct CycleReport {
  std::size_t cycle = 0;
  Timestamp boundary = 0;
  std::size_t new_links = 0;
  std::size_t seeds = 0;
  std::size_t carried = 0;             // frontier cliques extended this cycle
  std::size_t found_before_removal = 0;
  std::size_t checked = 0;             // cliques eligible for removal
  std::size_t removed = 0;
  std::size_t found = 0;               // new maximal cliques after removal
  std::size_t maximal = 0;
  std::size_t frontier = 0;
  std::size_t live_peak = 0;           // cliques materialized at once
  double seconds = 0.0;
};

// Result of the two enumeration phases before sub-clique removal.
struct CycleEnumeration {
  KeySet found;
  CliqueMap frontier_next;
  LinkStream visible;   // tail plus new links, floored at the first visible timestamp
  std::size_t seeds = 0;
  std::size_t carried = 0;
  std::size_t live_peak = 0;
};

// Runs phase A (right extension of the carried frontier) and phase B
// (seeds over the visible links). `new_links` must lie in (boundary, next].
CycleEnumeration enumerate_cycle(const BatchState& state, const LinkList& new_links,
                                 Timestamp next_boundary,
                                 const EnumerationOptions& options = {});

struct RemovalStats {
  std::size_t checked = 0;
  std::size_t removed = 0;
};

// Drops every clique starting at or before `prev_boundary` that is strictly
// contained in another member. No-op on the first cycle.
RemovalStats remove_sub_cliques(KeySet& found, std::optional<Timestamp> prev_boundary);

std::pair<BatchState, CycleReport> update_batch(const BatchState& state,
                                                const LinkList& new_links,
                                                Timestamp next_boundary,
                                                const EnumerationOptions& options = {});

// Clamps right ends to t_end and drops what the clamping made redundant.
KeySet finalize(const BatchState& state, Timestamp t_end);

// Cliques of `result` that are not maximal within the stream's observation
// window (dt = 1). Empty means every clique is certified.
std::vector<CliqueKey> uncertified(const KeySet& result, const LinkStream& stream,
                                   const Params& p);

// Versioned JSON with a checksum; collections in key order.
constexpr int state_format_version = 1;
void save_state(const BatchState& state, std::ostream& out);
std::string save_state(const BatchState& state);
// Throws StateError on malformed, truncated or tampered input and
// ConfigError when `expected` parameters disagree with the stored ones.
BatchState load_state(std::istream& in, std::optional<Params> expected = std::nullopt);
BatchState load_state(const std::string& text, std::optional<Params> expected = std::nullopt);
void save_state_file(const BatchState& state, const std::string& path);
BatchState load_state_file(const std::string& path, std::optional<Params> expected = std::nullopt);

}  // namespace eoc
