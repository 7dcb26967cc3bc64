#include "eoc/link_stream.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "eoc/errors.hpp"

namespace eoc {

void validate(const Params& p) {
  if (p.delta < 1) throw ConfigError("delta must be >= 1");
  if (p.gamma < 1) throw ConfigError("gamma must be >= 1");
}

std::uint64_t LinkStream::pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

LinkStream LinkStream::from_links(LinkList links, std::optional<Interval> observation,
                                  std::optional<Timestamp> visible_from) {
  LinkStream s;
  for (auto& l : links) {
    if (l.u == l.v) throw ContractViolation("self-loop on vertex " + std::to_string(l.u));
    if (l.u > l.v) std::swap(l.u, l.v);
  }
  std::sort(links.begin(), links.end(), by_time);
  links.erase(std::unique(links.begin(), links.end()), links.end());
  s.links_ = std::move(links);

  if (observation) {
    if (observation->start > observation->end) throw ConfigError("observation window is inverted");
    s.observation_ = *observation;
  } else if (!s.links_.empty()) {
    s.observation_ = {s.links_.front().t, s.links_.back().t};
  }
  if (!s.links_.empty() && (s.links_.front().t < s.observation_.start ||
                            s.links_.back().t > s.observation_.end)) {
    throw RangeError(s.links_.front().t < s.observation_.start ? s.links_.front().t
                                                                : s.links_.back().t,
                     "link outside the observation window");
  }
  s.visible_from_ = visible_from.value_or(s.observation_.start);
  if (!s.links_.empty() && s.links_.front().t < s.visible_from_) {
    throw RangeError(s.links_.front().t, "link below the visible floor");
  }

  for (const auto& l : s.links_) {
    s.pairs_[pair_key(l.u, l.v)].push_back(l.t);  // links are time-sorted
    s.vertices_.push_back(l.u);
    s.vertices_.push_back(l.v);
  }
  std::sort(s.vertices_.begin(), s.vertices_.end());
  s.vertices_.erase(std::unique(s.vertices_.begin(), s.vertices_.end()), s.vertices_.end());
  for (const auto& [key, occ] : s.pairs_) {
    auto u = static_cast<Vertex>(key >> 32);
    auto v = static_cast<Vertex>(key & 0xffffffffu);
    s.adjacency_[u].push_back(v);
    s.adjacency_[v].push_back(u);
  }
  for (auto& [v, adj] : s.adjacency_) std::sort(adj.begin(), adj.end());
  return s;
}

TimeBounds LinkStream::time_bounds() const {
  if (links_.empty()) throw EmptyStreamError("stream has no links");
  Timestamp lo = links_.front().t, hi = links_.back().t;
  return {lo, hi, hi - lo};
}

std::span<const Timestamp> LinkStream::occurrences(Vertex u, Vertex v) const {
  auto it = pairs_.find(pair_key(u, v));
  if (it == pairs_.end()) return {};
  return it->second;
}

std::span<const Timestamp> LinkStream::occurrences_within(Vertex u, Vertex v, Interval window) const {
  auto occ = occurrences(u, v);
  Timestamp lo = std::max(window.start, visible_from_);
  if (occ.empty() || lo > window.end) return {};
  auto first = std::lower_bound(occ.begin(), occ.end(), lo);
  auto last = std::upper_bound(first, occ.end(), window.end);
  return {first, last};
}

std::vector<Timestamp> LinkStream::occurrences_in(Vertex u, Vertex v, Interval window) const {
  auto s = occurrences_within(u, v, window);
  return {s.begin(), s.end()};
}

std::size_t LinkStream::count_in(Vertex u, Vertex v, Interval window) const {
  return occurrences_within(u, v, window).size();
}

std::optional<Timestamp> LinkStream::first_gamma_occurrence(Vertex u, Vertex v,
                                                            std::uint32_t gamma,
                                                            Interval window) const {
  if (gamma < 1) throw ContractViolation("gamma must be >= 1");
  auto s = occurrences_within(u, v, window);
  if (s.size() < gamma) return std::nullopt;
  return s[gamma - 1];
}

std::optional<Timestamp> LinkStream::last_gamma_occurrence(Vertex u, Vertex v,
                                                           std::uint32_t gamma,
                                                           Interval window) const {
  if (gamma < 1) throw ContractViolation("gamma must be >= 1");
  auto s = occurrences_within(u, v, window);
  if (s.size() < gamma) return std::nullopt;
  return s[s.size() - gamma];
}

VertexSet LinkStream::neighbors_min_count(const VertexSet& seed, Interval window,
                                          std::uint32_t gamma) const {
  VertexSet out;
  if (window.start > window.end) return out;
  for (Vertex x : seed) {
    for (Vertex w : neighbors(x)) {
      if (std::binary_search(seed.begin(), seed.end(), w)) continue;
      if (count_in(x, w, window) >= gamma) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const VertexSet& LinkStream::neighbors(Vertex v) const {
  static const VertexSet none;
  auto it = adjacency_.find(v);
  return it == adjacency_.end() ? none : it->second;
}

std::vector<std::pair<Vertex, Vertex>> LinkStream::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(pairs_.size());
  for (const auto& [key, occ] : pairs_) {
    out.emplace_back(static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinkList LinkStream::links_in(Interval window) const {
  auto lo = std::lower_bound(links_.begin(), links_.end(), window.start,
                             [](const TemporalLink& l, Timestamp t) { return l.t < t; });
  auto hi = std::upper_bound(lo, links_.end(), window.end,
                             [](Timestamp t, const TemporalLink& l) { return t < l.t; });
  return {lo, hi};
}

void LinkStream::dump(std::ostream& out) const {
  for (const auto& l : links_) out << l.u << ' ' << l.v << ' ' << l.t << '\n';
}

std::string LinkStream::dump() const {
  std::ostringstream os;
  dump(os);
  return os.str();
}

namespace {

bool parse_int(std::string_view field, long long& out) {
  auto* first = field.data();
  auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_fields(std::string_view line, Delimiter d) {
  std::vector<std::string_view> fields;
  auto trim = [](std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return std::string_view{};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  if (d == Delimiter::comma) {
    std::size_t pos = 0;
    while (true) {
      auto next = line.find(',', pos);
      fields.push_back(trim(line.substr(pos, next - pos)));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    std::size_t pos = 0;
    while (pos < line.size()) {
      auto b = line.find_first_not_of(" \t\r", pos);
      if (b == std::string_view::npos) break;
      auto e = line.find_first_of(" \t\r", b);
      if (e == std::string_view::npos) e = line.size();
      fields.push_back(line.substr(b, e - b));
      pos = e;
    }
  }
  return fields;
}

}  // namespace

LinkStream parse_links(std::istream& in, const FormatSpec& spec) {
  LinkList links;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    auto b = view.find_first_not_of(" \t\r");
    if (b == std::string_view::npos || view[b] == '#') continue;
    auto fields = split_fields(view.substr(b), spec.delimiter);
    if (fields.size() != 3) {
      throw ParseError(lineno, "expected 3 fields, found " + std::to_string(fields.size()));
    }
    long long vals[3];
    for (int i = 0; i < 3; ++i) {
      if (!parse_int(fields[i], vals[i])) {
        throw ParseError(lineno, "not an integer: '" + std::string(fields[i]) + "'");
      }
    }
    long long u, v, t;
    if (spec.order == ColumnOrder::tuv) {
      t = vals[0], u = vals[1], v = vals[2];
    } else {
      u = vals[0], v = vals[1], t = vals[2];
    }
    constexpr long long vmax = std::numeric_limits<Vertex>::max();
    if (u < 0 || v < 0 || u > vmax || v > vmax) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
    links.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Timestamp>(t)});
  }
  if (links.empty()) throw EmptyStreamError("input holds no links");
  if (spec.rebase) {
    Timestamp lo = std::min_element(links.begin(), links.end(), by_time)->t;
    for (auto& l : links) l.t -= lo;
  }
  return LinkStream::from_links(std::move(links));
}

LinkStream parse_links_file(const std::string& path, const FormatSpec& spec) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_links(in, spec);
}

}  // namespace eoc
