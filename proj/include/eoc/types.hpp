#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace eoc {

using Vertex = std::uint32_t;
using Timestamp = std::int64_t;
using VertexSet = std::vector<Vertex>;  // strictly ascending

// Closed interval [start, end] over integer time.
struct Interval {
  Timestamp start = 0;
  Timestamp end = 0;

  Timestamp length() const { return end - start; }
  bool contains(Timestamp t) const { return start <= t && t <= end; }
  bool covers(const Interval& o) const { return start <= o.start && o.end <= end; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Window length and minimum link count per window.
struct Params {
  Timestamp delta = 1;
  std::uint32_t gamma = 1;

  friend bool operator==(const Params&, const Params&) = default;
};

void validate(const Params& p);

struct TemporalLink {
  Vertex u = 0;
  Vertex v = 0;
  Timestamp t = 0;

  friend bool operator==(const TemporalLink&, const TemporalLink&) = default;
};

// Ascending by (t, u, v): the canonical dump order.
inline bool by_time(const TemporalLink& a, const TemporalLink& b) {
  if (a.t != b.t) return a.t < b.t;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

using LinkList = std::vector<TemporalLink>;

}  // namespace eoc
