#include "eoc/clique.hpp"

#include <algorithm>
#include <charconv>

#include "eoc/errors.hpp"

namespace eoc {

std::size_t CliqueKeyHash::operator()(const CliqueKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(k.span.start));
  mix(static_cast<std::uint64_t>(k.span.end));
  for (Vertex v : k.vertices) mix(v);
  return static_cast<std::size_t>(h);
}

CliqueKey make_key(VertexSet vertices, Interval span) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() < 2) throw ContractViolation("a clique needs at least two vertices");
  if (span.start > span.end) throw ContractViolation("inverted clique span");
  return {span, std::move(vertices)};
}

CliqueKey canonical_key(const Clique& c) { return make_key(c.vertices, c.span); }

std::string to_string(const CliqueKey& k) {
  std::string out;
  for (std::size_t i = 0; i < k.vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(k.vertices[i]);
  }
  out += " [" + std::to_string(k.span.start) + ',' + std::to_string(k.span.end) + ']';
  return out;
}

namespace {

template <class T>
T read_number(std::string_view s, std::string_view text) {
  T out{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("malformed clique: '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

CliqueKey parse_clique(std::string_view text) {
  auto space = text.find(' ');
  if (space == std::string_view::npos || text.size() < space + 5 || text[space + 1] != '[' ||
      text.back() != ']') {
    throw Error("malformed clique: '" + std::string(text) + "'");
  }
  VertexSet z;
  std::string_view vs = text.substr(0, space);
  std::size_t pos = 0;
  while (true) {
    auto comma = vs.find(',', pos);
    z.push_back(read_number<Vertex>(vs.substr(pos, comma - pos), text));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  std::string_view iv = text.substr(space + 2, text.size() - space - 3);
  auto comma = iv.find(',');
  if (comma == std::string_view::npos) throw Error("malformed clique: '" + std::string(text) + "'");
  Interval span{read_number<Timestamp>(iv.substr(0, comma), text),
                read_number<Timestamp>(iv.substr(comma + 1), text)};
  try {
    return make_key(std::move(z), span);
  } catch (const ContractViolation& e) {
    throw Error("malformed clique: '" + std::string(text) + "': " + e.what());
  }
}

bool pair_satisfies(const LinkStream& stream, Vertex u, Vertex v, Interval span,
                    const Params& p) {
  auto occ = stream.occurrences_within(u, v, span);
  const std::size_t g = p.gamma;
  if (occ.size() < g) return false;
  // A single window covers the whole span.
  if (span.end - span.start <= p.delta) return true;
  // Window counts only drop at τ = a and right after an occurrence leaves.
  if (occ[g - 1] > span.start + p.delta) return false;
  const Timestamp last_start = span.end - p.delta;
  for (std::size_t j = 0; j < occ.size() && occ[j] + 1 <= last_start; ++j) {
    if (j + g >= occ.size() || occ[j + g] > occ[j] + 1 + p.delta) return false;
  }
  return true;
}

bool is_delta_gamma_clique(const VertexSet& z, Interval span, const LinkStream& stream,
                           const Params& p) {
  if (z.size() < 2) throw ContractViolation("a clique needs at least two vertices");
  if (span.start > span.end) return false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (!pair_satisfies(stream, z[i], z[j], span, p)) return false;
    }
  }
  return true;
}

bool extends_with(const VertexSet& z, Vertex w, Interval span, const LinkStream& stream,
                  const Params& p) {
  for (Vertex x : z) {
    if (x == w || !pair_satisfies(stream, x, w, span, p)) return false;
  }
  return true;
}

bool is_strict_subset(const VertexSet& inner, const VertexSet& outer) {
  return inner.size() < outer.size() &&
         std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool contains(const CliqueKey& outer, const CliqueKey& inner) {
  if (outer.vertices == inner.vertices) {
    return outer.span.covers(inner.span) && outer.span != inner.span;
  }
  return is_strict_subset(inner.vertices, outer.vertices) && outer.span.covers(inner.span);
}

}  // namespace eoc
