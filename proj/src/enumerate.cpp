#include "eoc/enumerate.hpp"

#include <algorithm>
#include <map>

#include "eoc/errors.hpp"

namespace eoc {

bool WorkSets::push(Clique c, const EnumerationContext& ctx) {
  CliqueKey k = c.key();
  if (seen.contains(k)) return false;
  if (ctx.options.audit && !is_delta_gamma_clique(k.vertices, k.span, *ctx.options.audit,
                                                  ctx.params)) {
    throw ContractViolation("enqueued an invalid clique " + to_string(k));
  }
#ifndef NDEBUG
  if (c.provenance != Provenance::carried &&
      !is_delta_gamma_clique(k.vertices, k.span, ctx.stream, ctx.params)) {
    throw ContractViolation("enqueued an invalid clique " + to_string(k));
  }
#endif
  seen.insert(std::move(k));
  pending.push_back(std::move(c));
  peak_pending = std::max(peak_pending, pending.size());
  return true;
}

Clique WorkSets::pop(bool fifo) {
  Clique c;
  if (fifo) {
    c = std::move(pending.front());
    pending.pop_front();
  } else {
    c = std::move(pending.back());
    pending.pop_back();
  }
  return c;
}

std::vector<Clique> seed_cliques(const LinkStream& stream, const Params& p, Interval window) {
  validate(p);
  const std::size_t g = p.gamma;
  std::map<CliqueKey, Clique> seeds;
  auto emit = [&](Vertex u, Vertex v, Interval span) {
    CliqueKey k{span, {u, v}};
    if (seeds.contains(k)) return;
    Clique c{k.vertices, span, nullptr, Provenance::seed};
    seeds.emplace(std::move(k), std::move(c));
  };
  for (auto [u, v] : stream.pairs()) {
    auto occ = stream.occurrences_within(u, v, window);
    if (occ.size() < g) continue;
    for (std::size_t j = 0; j + g - 1 < occ.size(); ++j) {
      Timestamp first = occ[j], last = occ[j + g - 1];
      if (last - first > p.delta) continue;
      if (stream.count_in(u, v, {first, first + p.delta}) == g) {
        emit(u, v, {first, first + p.delta});
      }
      if (stream.count_in(u, v, {last - p.delta, last}) == g) {
        Timestamp start = std::max(last - p.delta, window.start);
        emit(u, v, {start, start + p.delta});
      }
    }
  }
  std::vector<Clique> out;
  out.reserve(seeds.size());
  for (auto& [k, c] : seeds) {
    c.candidates =
        std::make_shared<const VertexSet>(stream.neighbors_min_count(c.vertices, c.span, p.gamma));
    out.push_back(std::move(c));
  }
  return out;
}

bool expand_vertex_set(const Clique& c, WorkSets& ws, const EnumerationContext& ctx) {
  if (c.provenance == Provenance::carried) {
    throw ContractViolation("carried cliques are never grown by vertex addition");
  }
  if (!c.candidates) throw ContractViolation("vertex addition needs a candidate set");
  bool blocked = true;
  for (Vertex w : *c.candidates) {
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), w)) continue;
    if (!extends_with(c.vertices, w, c.span, ctx.stream, ctx.params)) continue;
    blocked = false;
    VertexSet z = c.vertices;
    z.insert(std::upper_bound(z.begin(), z.end(), w), w);
    ws.push({std::move(z), c.span, c.candidates, Provenance::derived}, ctx);
  }
  return blocked;
}

bool extend_right(const Clique& c, WorkSets& ws, const EnumerationContext& ctx) {
  const auto& z = c.vertices;
  const Interval probe{c.span.start, c.span.end + 1};
  std::optional<Timestamp> reach;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      auto t = ctx.stream.last_gamma_occurrence(z[i], z[j], ctx.params.gamma, probe);
      if (!t) return true;
      reach = reach ? std::min(*reach, *t) : *t;
    }
  }
  Timestamp end = *reach + ctx.params.delta;
  if (end <= c.span.end) return true;
  Provenance prov = c.provenance == Provenance::carried ? Provenance::carried : Provenance::derived;
  ws.push({z, {c.span.start, end}, c.candidates, prov}, ctx);
  return false;
}

bool extend_left(const Clique& c, WorkSets& ws, const EnumerationContext& ctx) {
  if (c.provenance == Provenance::carried) {
    throw ContractViolation("carried cliques are never extended to the left");
  }
  const auto& z = c.vertices;
  const Interval probe{c.span.start - 1, c.span.end};
  std::optional<Timestamp> reach;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      auto t = ctx.stream.first_gamma_occurrence(z[i], z[j], ctx.params.gamma, probe);
      if (!t) return true;
      reach = reach ? std::max(*reach, *t) : *t;
    }
  }
  Timestamp start = std::max(*reach - ctx.params.delta, ctx.t_start);
  if (start >= c.span.start) return true;
  ws.push({z, {start, c.span.end}, c.candidates, Provenance::derived}, ctx);
  return false;
}

void drain_carried(WorkSets& ws, const EnumerationContext& ctx, Timestamp boundary) {
  while (!ws.pending.empty()) {
    Clique c = ws.pop(ctx.options.fifo);
    if (extend_right(c, ws, ctx)) ws.found.insert(c.key());
    if (c.span.end >= boundary) ws.frontier_next.emplace(c.key(), c.candidates);
  }
}

void drain_fresh(WorkSets& ws, const EnumerationContext& ctx, Timestamp boundary) {
  while (!ws.pending.empty()) {
    Clique c = ws.pop(ctx.options.fifo);
    bool blocked = true;
    for (Step s : ctx.options.order) {
      switch (s) {
        case Step::add_vertex: blocked &= expand_vertex_set(c, ws, ctx); break;
        case Step::extend_left: blocked &= extend_left(c, ws, ctx); break;
        case Step::extend_right: blocked &= extend_right(c, ws, ctx); break;
      }
    }
    if (blocked) ws.found.insert(c.key());
    if (c.span.end >= boundary) ws.frontier_next.emplace(c.key(), c.candidates);
  }
}

}  // namespace eoc
