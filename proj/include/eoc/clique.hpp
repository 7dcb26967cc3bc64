#pragma once

#include <functional>
#include <memory>
#include <set>
#include <map>
#include <string>
#include <string_view>

#include "eoc/link_stream.hpp"
#include "eoc/types.hpp"

namespace eoc {

// Where a clique entered the current cycle. Carried cliques come from the
// previous frontier and may only be extended to the right.
enum class Provenance { seed, derived, carried };

using CandidatePtr = std::shared_ptr<const VertexSet>;

// Identity of a clique. Ordered by (span.start, span.end, vertices), which is
// also the order of result files.
struct CliqueKey {
  Interval span;
  VertexSet vertices;

  friend auto operator<=>(const CliqueKey&, const CliqueKey&) = default;
};

struct CliqueKeyHash {
  std::size_t operator()(const CliqueKey& k) const noexcept;
};

struct Clique {
  VertexSet vertices;
  Interval span;
  CandidatePtr candidates;  // null when not attached
  Provenance provenance = Provenance::derived;

  CliqueKey key() const { return {span, vertices}; }
};

using KeySet = std::set<CliqueKey>;
// Frontier cliques keep their candidate sets across cycles.
using CliqueMap = std::map<CliqueKey, CandidatePtr>;

// Sorts and dedupes the vertices; throws ContractViolation when fewer than
// two distinct vertices remain or the span is inverted.
CliqueKey make_key(VertexSet vertices, Interval span);
CliqueKey canonical_key(const Clique& c);

// "v1,v2,...,vk [a,b]"
std::string to_string(const CliqueKey& k);
CliqueKey parse_clique(std::string_view text);

// Every pair of Z has at least gamma links in every window
// [τ, min(τ+Δ, b)], τ ∈ [a, max(b-Δ, a)]. Evaluated over occurrence gaps.
bool is_delta_gamma_clique(const VertexSet& z, Interval span, const LinkStream& stream,
                           const Params& p);
bool pair_satisfies(const LinkStream& stream, Vertex u, Vertex v, Interval span,
                    const Params& p);
// Assumes (z, span) is already valid and checks only the pairs touching w.
bool extends_with(const VertexSet& z, Vertex w, Interval span, const LinkStream& stream,
                  const Params& p);

// Strict containment: same vertices with a strictly larger span, or a strict
// vertex superset whose span covers the inner one.
bool contains(const CliqueKey& outer, const CliqueKey& inner);

bool is_strict_subset(const VertexSet& inner, const VertexSet& outer);

}  // namespace eoc
