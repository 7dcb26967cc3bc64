#include "eoc/update.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>

#include "eoc/errors.hpp"

namespace eoc {

BatchState BatchState::initial(const Params& p, Timestamp t_start) {
  validate(p);
  BatchState s;
  s.params = p;
  s.t_start = t_start;
  return s;
}

bool operator==(const BatchState& a, const BatchState& b) {
  if (a.params != b.params || a.t_start != b.t_start || a.boundary != b.boundary ||
      a.maximal != b.maximal || a.link_tail != b.link_tail ||
      a.frontier.size() != b.frontier.size()) {
    return false;
  }
  for (auto ia = a.frontier.begin(), ib = b.frontier.begin(); ia != a.frontier.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    bool ca = static_cast<bool>(ia->second), cb = static_cast<bool>(ib->second);
    if (ca != cb || (ca && *ia->second != *ib->second)) return false;
  }
  return true;
}

CycleEnumeration enumerate_cycle(const BatchState& state, const LinkList& new_links,
                                 Timestamp next_boundary, const EnumerationOptions& options) {
  const Params& p = state.params;
  validate(p);
  if (state.boundary && next_boundary <= *state.boundary) {
    throw ConfigError("batch boundaries must increase");
  }
  if (next_boundary < state.t_start) throw ConfigError("boundary precedes the observation start");
  const Timestamp lowest = state.boundary ? *state.boundary + 1 : state.t_start;
  for (const auto& l : new_links) {
    if (l.t < lowest || l.t > next_boundary) throw RangeError(l.t, "link outside its batch");
  }

  // Only links from here on are visible to this cycle.
  const Timestamp floor = state.boundary ? std::max(*state.boundary - p.delta, state.t_start)
                                         : state.t_start;
  LinkList links;
  links.reserve(state.link_tail.size() + new_links.size());
  for (const auto& l : state.link_tail) {
    if (l.t >= floor) links.push_back(l);
  }
  links.insert(links.end(), new_links.begin(), new_links.end());

  CycleEnumeration out;
  out.visible = LinkStream::from_links(std::move(links), Interval{state.t_start, next_boundary},
                                       floor);
  EnumerationContext ctx{out.visible, p, state.t_start, options};

  // Carried results stay resident for the final merge.
  std::vector<const CliqueKey*> kept;
  for (const auto& k : state.maximal) {
    if (!state.frontier.contains(k)) kept.push_back(&k);
  }

  // Phase A: the carried frontier only grows to the right.
  std::size_t live_a = 0;
  {
    WorkSets ws;
    for (const auto& [k, cand] : state.frontier) {
      ws.push({k.vertices, k.span, cand, Provenance::carried}, ctx);
    }
    out.carried = state.frontier.size();
    drain_carried(ws, ctx, next_boundary);
    live_a = ws.seen.size();
    for (const auto* k : kept) live_a += !ws.seen.contains(*k);
    out.found = std::move(ws.found);
    out.frontier_next = std::move(ws.frontier_next);
  }

  // Phase B: everything that starts from the visible links.
  WorkSets ws;
  auto seeds = seed_cliques(out.visible, p, {floor, next_boundary});
  out.seeds = seeds.size();
  for (auto& s : seeds) ws.push(std::move(s), ctx);
  drain_fresh(ws, ctx, next_boundary);

  // Distinct cliques resident at the end of phase B.
  std::size_t live_b = ws.seen.size();
  for (const auto* k : kept) live_b += !ws.seen.contains(*k);
  for (const auto& k : out.found) live_b += !ws.seen.contains(k) && !state.maximal.contains(k);
  for (const auto& [k, cand] : out.frontier_next) {
    live_b += !ws.seen.contains(k) && !out.found.contains(k) && !state.maximal.contains(k);
  }
  out.live_peak = std::max(live_a, live_b);
  out.found.merge(ws.found);
  out.frontier_next.merge(ws.frontier_next);
  return out;
}

RemovalStats remove_sub_cliques(KeySet& found, std::optional<Timestamp> prev_boundary) {
  RemovalStats stats;
  if (!prev_boundary) return stats;

  // Intervals per vertex set, and vertex sets by member vertex.
  std::map<VertexSet, std::vector<Interval>> by_set;
  for (const auto& k : found) by_set[k.vertices].push_back(k.span);
  std::unordered_map<Vertex, std::vector<const std::pair<const VertexSet, std::vector<Interval>>*>>
      by_vertex;
  for (const auto& entry : by_set) {
    for (Vertex v : entry.first) by_vertex[v].push_back(&entry);
  }

  std::vector<CliqueKey> doomed;
  for (const auto& k : found) {
    if (k.span.start > *prev_boundary) continue;
    ++stats.checked;
    bool inside = false;
    for (const auto& iv : by_set[k.vertices]) {
      if (iv != k.span && iv.covers(k.span)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      for (const auto* entry : by_vertex[k.vertices.front()]) {
        if (!is_strict_subset(k.vertices, entry->first)) continue;
        for (const auto& iv : entry->second) {
          if (iv.covers(k.span)) {
            inside = true;
            break;
          }
        }
        if (inside) break;
      }
    }
    if (inside) doomed.push_back(k);
  }
  for (const auto& k : doomed) found.erase(k);
  stats.removed = doomed.size();
  return stats;
}

std::pair<BatchState, CycleReport> update_batch(const BatchState& state,
                                                const LinkList& new_links,
                                                Timestamp next_boundary,
                                                const EnumerationOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  CycleEnumeration e = enumerate_cycle(state, new_links, next_boundary, options);

  CycleReport r;
  r.boundary = next_boundary;
  r.new_links = new_links.size();
  r.seeds = e.seeds;
  r.carried = e.carried;
  r.found_before_removal = e.found.size();
  RemovalStats rs = remove_sub_cliques(e.found, state.boundary);
  r.checked = rs.checked;
  r.removed = rs.removed;
  r.found = e.found.size();

  BatchState next;
  next.params = state.params;
  next.t_start = state.t_start;
  next.boundary = next_boundary;
  next.maximal = std::move(e.found);
  for (const auto& k : state.maximal) {
    if (!state.frontier.contains(k)) next.maximal.insert(k);
  }
  next.frontier = std::move(e.frontier_next);
  next.link_tail = e.visible.links_in({next_boundary - state.params.delta, next_boundary});

  r.maximal = next.maximal.size();
  r.frontier = next.frontier.size();
  r.live_peak = e.live_peak;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(next), r};
}

KeySet finalize(const BatchState& state, Timestamp t_end) {
  KeySet out;
  std::vector<CliqueKey> clamped;
  for (const auto& k : state.maximal) {
    if (k.span.start > t_end) {
      throw ContractViolation("clique " + to_string(k) + " starts after the observation end");
    }
    if (k.span.end <= t_end) {
      out.insert(k);
      continue;
    }
    CliqueKey c{{k.span.start, t_end}, k.vertices};
    if (out.insert(c).second) clamped.push_back(std::move(c));
  }
  // Only a clamped clique can have become a sub-clique of another one.
  for (const auto& c : clamped) {
    for (const auto& o : out) {
      if (o.span.end == t_end && contains(o, c)) {
        out.erase(c);
        break;
      }
    }
  }
  return out;
}

std::vector<CliqueKey> uncertified(const KeySet& result, const LinkStream& stream,
                                   const Params& p) {
  std::vector<CliqueKey> bad;
  const Interval obs = stream.observation();
  for (const auto& k : result) {
    const auto& z = k.vertices;
    bool ok = obs.covers(k.span) && is_delta_gamma_clique(z, k.span, stream, p);
    if (ok && k.span.start - 1 >= obs.start) {
      ok = !is_delta_gamma_clique(z, {k.span.start - 1, k.span.end}, stream, p);
    }
    if (ok && k.span.end + 1 <= obs.end) {
      ok = !is_delta_gamma_clique(z, {k.span.start, k.span.end + 1}, stream, p);
    }
    if (ok) {
      for (Vertex w : stream.neighbors(z.front())) {
        if (std::binary_search(z.begin(), z.end(), w)) continue;
        if (extends_with(z, w, k.span, stream, p)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) bad.push_back(k);
  }
  return bad;
}

}  // namespace eoc
