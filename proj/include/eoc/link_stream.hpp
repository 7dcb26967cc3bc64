#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>

#include "eoc/types.hpp"

namespace eoc {

enum class ColumnOrder { tuv, uvt };
enum class Delimiter { whitespace, comma };

struct FormatSpec {
  ColumnOrder order = ColumnOrder::uvt;
  Delimiter delimiter = Delimiter::whitespace;
  bool rebase = false;  // shift timestamps so that t_min becomes 0
};

struct TimeBounds {
  Timestamp t_min = 0;
  Timestamp t_max = 0;
  Timestamp lifetime = 0;

  friend bool operator==(const TimeBounds&, const TimeBounds&) = default;
};

// Immutable, indexed set of undirected temporal links.
//
// Every occurrence query is restricted to timestamps >= visible_from(). A
// stream built for one update cycle holds only the retained link tail plus the
// new batch, and its floor makes that restriction explicit.
class LinkStream {
 public:
  LinkStream() = default;

  // Canonicalizes (u < v), drops exact duplicates and builds the indexes.
  // Self-loops raise ContractViolation. The observation window defaults to
  // [t_min, t_max] and must cover every link. Links below `visible_from`
  // are rejected.
  static LinkStream from_links(LinkList links,
                               std::optional<Interval> observation = std::nullopt,
                               std::optional<Timestamp> visible_from = std::nullopt);

  const LinkList& links() const { return links_; }
  const VertexSet& vertices() const { return vertices_; }
  std::size_t link_count() const { return links_.size(); }
  std::size_t static_edge_count() const { return pairs_.size(); }
  bool empty() const { return links_.empty(); }

  Interval observation() const { return observation_; }
  Timestamp visible_from() const { return visible_from_; }

  // Throws EmptyStreamError on an empty stream.
  TimeBounds time_bounds() const;

  // Full occurrence list of a pair (either orientation); empty if unknown.
  std::span<const Timestamp> occurrences(Vertex u, Vertex v) const;
  std::vector<Timestamp> occurrences_in(Vertex u, Vertex v, Interval window) const;
  // Same as occurrences_in, as a view into the index.
  std::span<const Timestamp> occurrences_within(Vertex u, Vertex v, Interval window) const;
  std::size_t count_in(Vertex u, Vertex v, Interval window) const;

  // gamma-th smallest / largest occurrence inside the window.
  std::optional<Timestamp> first_gamma_occurrence(Vertex u, Vertex v, std::uint32_t gamma,
                                                  Interval window) const;
  std::optional<Timestamp> last_gamma_occurrence(Vertex u, Vertex v, std::uint32_t gamma,
                                                 Interval window) const;

  // Vertices outside `seed` with at least gamma links inside the window to
  // at least one seed vertex.
  VertexSet neighbors_min_count(const VertexSet& seed, Interval window,
                                std::uint32_t gamma) const;

  // Static neighbors of a vertex over the whole stream.
  const VertexSet& neighbors(Vertex v) const;

  // All (canonical) pairs with at least one link, ascending.
  std::vector<std::pair<Vertex, Vertex>> pairs() const;

  LinkList links_in(Interval window) const;

  // "u v t" per line, ascending by (t, u, v).
  void dump(std::ostream& out) const;
  std::string dump() const;

  friend bool operator==(const LinkStream& a, const LinkStream& b) {
    return a.links_ == b.links_ && a.observation_ == b.observation_;
  }

 private:
  static std::uint64_t pair_key(Vertex u, Vertex v);

  LinkList links_;
  VertexSet vertices_;
  std::unordered_map<std::uint64_t, std::vector<Timestamp>> pairs_;
  std::unordered_map<Vertex, VertexSet> adjacency_;
  Interval observation_{};
  Timestamp visible_from_ = 0;
};

// Parse one link per line in the given column order. Blank lines and lines
// starting with '#' are skipped. Throws ParseError (with line number) or
// EmptyStreamError.
LinkStream parse_links(std::istream& in, const FormatSpec& spec);
LinkStream parse_links_file(const std::string& path, const FormatSpec& spec);

}  // namespace eoc
