#pragma once

#include <array>
#include <deque>
#include <unordered_set>
#include <vector>

#include "eoc/clique.hpp"
#include "eoc/link_stream.hpp"

namespace eoc {

enum class Step { add_vertex, extend_left, extend_right };

struct EnumerationOptions {
  // Order in which the three growth steps run on each popped clique.
  std::array<Step, 3> order{Step::add_vertex, Step::extend_left, Step::extend_right};
  bool fifo = false;  // default worklist discipline is LIFO
  // When set, every enqueued clique is checked against this stream.
  const LinkStream* audit = nullptr;
};

struct EnumerationContext {
  const LinkStream& stream;  // the links visible to this cycle
  Params params;
  Timestamp t_start;  // left extensions never go below this
  EnumerationOptions options{};
};

struct WorkSets {
  std::deque<Clique> pending;                           // worklist
  std::unordered_set<CliqueKey, CliqueKeyHash> seen;    // every key ever enqueued
  KeySet found;                                         // cliques no step could grow
  CliqueMap frontier_next;                              // cliques reaching the boundary
  std::size_t peak_pending = 0;

  // Enqueues unless the key was seen before; returns whether it was new.
  bool push(Clique c, const EnumerationContext& ctx);
  Clique pop(bool fifo);
};

// Pair cliques holding exactly gamma links over a span of exactly Δ, built
// from the occurrences inside `window`. A span that would start below
// window.start is moved to [window.start, window.start + Δ]. Each seed gets
// its candidate set from the links inside its span.
std::vector<Clique> seed_cliques(const LinkStream& stream, const Params& p, Interval window);

// Each returns true when the clique could not be grown by that step.
bool expand_vertex_set(const Clique& c, WorkSets& ws, const EnumerationContext& ctx);
bool extend_right(const Clique& c, WorkSets& ws, const EnumerationContext& ctx);
bool extend_left(const Clique& c, WorkSets& ws, const EnumerationContext& ctx);

// Drains a worklist of carried cliques, extending them to the right only.
void drain_carried(WorkSets& ws, const EnumerationContext& ctx, Timestamp boundary);
// Drains a worklist of fresh cliques through all three steps.
void drain_fresh(WorkSets& ws, const EnumerationContext& ctx, Timestamp boundary);

}  // namespace eoc
