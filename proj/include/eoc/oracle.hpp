#pragma once

#include <optional>

#include "eoc/clique.hpp"
#include "eoc/link_stream.hpp"

namespace eoc {

// Reference enumerator for tiny instances. Deliberately naive.
struct OracleConfig {
  std::size_t max_vertices = 8;
  Timestamp max_span = 40;
};

// The clique condition evaluated window by window with linear counting.
bool satisfies_definition(const VertexSet& z, Interval span, const LinkStream& stream,
                          const Params& p);

// Every maximal clique whose span lies in `observation` (defaults to the
// stream's). Throws OracleBoundsError beyond the configured bounds.
KeySet brute_force_enumerate(const LinkStream& stream, const Params& p,
                             const OracleConfig& config = {},
                             std::optional<Interval> observation = std::nullopt);

// No vertex can be added and neither end can move out by one unit while
// staying inside the observation window.
bool check_maximality(const CliqueKey& c, const LinkStream& stream, const Params& p,
                      std::optional<Interval> observation = std::nullopt);

}  // namespace eoc
