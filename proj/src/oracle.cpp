#include "eoc/oracle.hpp"

#include <algorithm>
#include <bit>

#include "eoc/errors.hpp"

namespace eoc {

namespace {

bool pair_ok(std::span<const Timestamp> occ, Interval span, const Params& p) {
  const Timestamp last = std::max(span.end - p.delta, span.start);
  for (Timestamp tau = span.start; tau <= last; ++tau) {
    const Timestamp hi = std::min(tau + p.delta, span.end);
    std::size_t n = 0;
    for (Timestamp t : occ) n += (tau <= t && t <= hi);
    if (n < p.gamma) return false;
  }
  return true;
}

}  // namespace

bool satisfies_definition(const VertexSet& z, Interval span, const LinkStream& stream,
                          const Params& p) {
  if (z.size() < 2) throw ContractViolation("a clique needs at least two vertices");
  if (span.start > span.end) return false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (!pair_ok(stream.occurrences(z[i], z[j]), span, p)) return false;
    }
  }
  return true;
}

KeySet brute_force_enumerate(const LinkStream& stream, const Params& p,
                             const OracleConfig& config, std::optional<Interval> observation) {
  validate(p);
  const Interval obs = observation.value_or(stream.observation());
  const VertexSet& vs = stream.vertices();
  const std::size_t n = vs.size();
  if (n > config.max_vertices) {
    throw OracleBoundsError("oracle refuses " + std::to_string(n) + " vertices (max " +
                            std::to_string(config.max_vertices) + ")");
  }
  if (obs.end - obs.start > config.max_span) {
    throw OracleBoundsError("oracle refuses a span of " + std::to_string(obs.end - obs.start) +
                            " (max " + std::to_string(config.max_span) + ")");
  }
  const auto width = static_cast<std::size_t>(obs.end - obs.start + 1);
  auto cell = [&](Timestamp a, Timestamp b) {
    return static_cast<std::size_t>(a - obs.start) * width + static_cast<std::size_t>(b - obs.start);
  };

  // Validity per vertex pair, then per subset as the conjunction over its pairs.
  std::vector<std::vector<char>> pair_valid(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& table = pair_valid[i * n + j];
      table.assign(width * width, 0);
      auto occ = stream.occurrences(vs[i], vs[j]);
      if (occ.empty()) continue;
      for (Timestamp a = obs.start; a <= obs.end; ++a) {
        for (Timestamp b = a; b <= obs.end; ++b) table[cell(a, b)] = pair_ok(occ, {a, b}, p);
      }
    }
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<char>> valid(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) < 2) continue;
    auto& table = valid[mask];
    table.assign(width * width, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        const auto& pv = pair_valid[i * n + j];
        for (std::size_t c = 0; c < table.size(); ++c) table[c] &= pv[c];
      }
    }
  }

  KeySet out;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) < 2) continue;
    for (Timestamp a = obs.start; a <= obs.end; ++a) {
      for (Timestamp b = a; b <= obs.end; ++b) {
        if (!valid[mask][cell(a, b)]) continue;
        if (a - 1 >= obs.start && valid[mask][cell(a - 1, b)]) continue;
        if (b + 1 <= obs.end && valid[mask][cell(a, b + 1)]) continue;
        bool grows = false;
        for (std::size_t i = 0; i < n && !grows; ++i) {
          if (!(mask >> i & 1)) grows = valid[mask | (std::size_t{1} << i)][cell(a, b)];
        }
        if (grows) continue;
        VertexSet z;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) z.push_back(vs[i]);
        }
        out.insert({{a, b}, std::move(z)});
      }
    }
  }
  return out;
}

bool check_maximality(const CliqueKey& c, const LinkStream& stream, const Params& p,
                      std::optional<Interval> observation) {
  const Interval obs = observation.value_or(stream.observation());
  const auto& z = c.vertices;
  if (!obs.covers(c.span) || !satisfies_definition(z, c.span, stream, p)) return false;
  if (c.span.start - 1 >= obs.start &&
      satisfies_definition(z, {c.span.start - 1, c.span.end}, stream, p)) {
    return false;
  }
  if (c.span.end + 1 <= obs.end &&
      satisfies_definition(z, {c.span.start, c.span.end + 1}, stream, p)) {
    return false;
  }
  for (Vertex w : stream.vertices()) {
    if (std::binary_search(z.begin(), z.end(), w)) continue;
    VertexSet bigger = z;
    bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), w), w);
    if (satisfies_definition(bigger, c.span, stream, p)) return false;
  }
  return true;
}

}  // namespace eoc
