#include <gtest/gtest.h>

#include <algorithm>

#include "eoc/enumerate.hpp"
#include "eoc/errors.hpp"
#include "eoc/oracle.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace eoc {
namespace {

using testing::f1;

KeySet keys_of(const std::vector<Clique>& cs) {
  KeySet out;
  for (const auto& c : cs) out.insert(c.key());
  return out;
}

TEST(Seeds, F1) {
  auto s = f1();
  auto seeds = seed_cliques(s, {3, 2}, s.observation());
  // Frozen from reference_seeds; [-1,2] for (1,2) moves up to [1,4].
  KeySet expected{make_key({1, 2}, {1, 4}), make_key({1, 2}, {4, 7}), make_key({1, 3}, {1, 4}),
                  make_key({1, 3}, {2, 5}), make_key({2, 3}, {2, 5})};
  EXPECT_EQ(keys_of(seeds), expected);
  EXPECT_EQ(testing::reference_seeds(s, {3, 2}, s.observation()), expected);
  for (const auto& c : seeds) {
    ASSERT_TRUE(c.candidates);
    EXPECT_EQ(c.provenance, Provenance::seed);
  }
}

TEST(Seeds, ExactGammaRun) {
  // Occurrences exactly {T-γ+1, ..., T} give the two spans anchored at the run.
  const Timestamp T = 20, d = 6;
  auto s = testing::parse_text("1 2 18\n1 2 19\n1 2 20\n");
  auto got = keys_of(seed_cliques(s, {d, 3}, {0, T}));
  EXPECT_TRUE(got.contains(make_key({1, 2}, {T - 2, T - 2 + d})));
  EXPECT_TRUE(got.contains(make_key({1, 2}, {T - d, T})));
}

TEST(Seeds, TooFewOccurrences) {
  auto s = testing::parse_text("1 2 3\n2 3 9\n");
  EXPECT_TRUE(seed_cliques(s, {4, 2}, s.observation()).empty());
}

TEST(Seeds, MatchReferenceAndShape) {
  for (const auto& inst : testing::corpus(150)) {
    const auto& s = inst.stream;
    const auto& p = inst.params;
    auto seeds = seed_cliques(s, p, s.observation());
    ASSERT_EQ(keys_of(seeds), testing::reference_seeds(s, p, s.observation())) << inst.seed;
    for (const auto& c : seeds) {
      EXPECT_EQ(c.vertices.size(), 2u);
      EXPECT_EQ(c.span.length(), p.delta);
      EXPECT_TRUE(is_delta_gamma_clique(c.vertices, c.span, s, p));
      const auto k = s.count_in(c.vertices[0], c.vertices[1], c.span);
      if (c.span.start > s.observation().start) {
        EXPECT_EQ(k, p.gamma);
      } else {
        EXPECT_GE(k, p.gamma);
      }
      EXPECT_EQ(*c.candidates, s.neighbors_min_count(c.vertices, c.span, p.gamma));
    }
  }
}

struct Harness {
  LinkStream stream = f1();
  Params params{3, 2};
  EnumerationContext ctx{stream, params, stream.observation().start};
  WorkSets ws;
};

TEST(Steps, VertexAddition) {
  Harness h;
  auto cand = std::make_shared<const VertexSet>(VertexSet{3});
  Clique c{{1, 2}, {2, 5}, cand, Provenance::derived};
  EXPECT_FALSE(expand_vertex_set(c, h.ws, h.ctx));
  ASSERT_EQ(h.ws.pending.size(), 1u);
  EXPECT_EQ(h.ws.pending.back().key(), make_key({1, 2, 3}, {2, 5}));
  EXPECT_EQ(h.ws.pending.back().candidates, cand);
  // Seen already: still blocked-false, no second copy.
  EXPECT_FALSE(expand_vertex_set(c, h.ws, h.ctx));
  EXPECT_EQ(h.ws.pending.size(), 1u);
  Clique bare{{1, 2}, {2, 5}, std::make_shared<const VertexSet>(), Provenance::derived};
  EXPECT_TRUE(expand_vertex_set(bare, h.ws, h.ctx));
  Clique wide{{1, 2}, {1, 5}, cand, Provenance::derived};
  EXPECT_TRUE(expand_vertex_set(wide, h.ws, h.ctx));
}

TEST(Steps, VertexAdditionPreconditions) {
  Harness h;
  EXPECT_THROW(expand_vertex_set({{1, 2}, {2, 5}, nullptr, Provenance::derived}, h.ws, h.ctx),
               ContractViolation);
  auto cand = std::make_shared<const VertexSet>(VertexSet{3});
  EXPECT_THROW(expand_vertex_set({{1, 2}, {2, 5}, cand, Provenance::carried}, h.ws, h.ctx),
               ContractViolation);
  EXPECT_THROW(extend_left({{1, 2}, {2, 5}, cand, Provenance::carried}, h.ws, h.ctx),
               ContractViolation);
}

TEST(Steps, RightExtension) {
  Harness h;
  EXPECT_FALSE(extend_right({{1, 2}, {1, 4}, nullptr, Provenance::derived}, h.ws, h.ctx));
  EXPECT_EQ(h.ws.pending.back().key(), make_key({1, 2}, {1, 7}));
  // Second-to-last link at 4 gives 4 + 3 = 7: no growth.
  EXPECT_TRUE(extend_right({{1, 2}, {1, 7}, nullptr, Provenance::derived}, h.ws, h.ctx));
  // (1,3) has one link in [4,6].
  EXPECT_TRUE(extend_right({{1, 2, 3}, {4, 5}, nullptr, Provenance::derived}, h.ws, h.ctx));
  // Carried cliques stay carried.
  Harness g;
  EXPECT_FALSE(extend_right({{1, 2}, {1, 4}, nullptr, Provenance::carried}, g.ws, g.ctx));
  EXPECT_EQ(g.ws.pending.back().provenance, Provenance::carried);
}

TEST(Steps, LeftExtension) {
  Harness h;
  EXPECT_FALSE(extend_left({{1, 2}, {2, 5}, nullptr, Provenance::derived}, h.ws, h.ctx));
  EXPECT_EQ(h.ws.pending.back().key(), make_key({1, 2}, {1, 5}));
  // Clamped at the observation start.
  EXPECT_TRUE(extend_left({{1, 2}, {1, 5}, nullptr, Provenance::derived}, h.ws, h.ctx));
  auto s = testing::parse_text("1 2 4\n1 2 5\n1 2 7\n1 2 8\n");
  EnumerationContext ctx{s, {3, 2}, 0};
  WorkSets ws;
  // Second link in [3, 8] is at 5, 5 - 3 = 2 < 4: grows to [2, 8].
  EXPECT_FALSE(extend_left({{1, 2}, {4, 8}, nullptr, Provenance::derived}, ws, ctx));
  EXPECT_EQ(ws.pending.back().key(), make_key({1, 2}, {2, 8}));
  // Second link in [1, 8] is 5: 5 - 3 = 2 equals the start, blocked.
  EXPECT_TRUE(extend_left({{1, 2}, {2, 8}, nullptr, Provenance::derived}, ws, ctx));
  // Pair (1,3) absent: blocked.
  EXPECT_TRUE(extend_left({{1, 2, 3}, {4, 8}, nullptr, Provenance::derived}, ws, ctx));
}

TEST(Steps, GrowthIsStrict) {
  for (const auto& inst : testing::corpus(60)) {
    const auto& s = inst.stream;
    EnumerationContext ctx{s, inst.params, s.observation().start};
    for (const auto& seed : seed_cliques(s, inst.params, s.observation())) {
      WorkSets ws;
      expand_vertex_set(seed, ws, ctx);
      for (const auto& c : ws.pending) {
        EXPECT_EQ(c.vertices.size(), seed.vertices.size() + 1);
        EXPECT_EQ(c.span, seed.span);
      }
      ws.pending.clear();
      if (!extend_right(seed, ws, ctx)) {
        EXPECT_EQ(ws.pending.back().span.start, seed.span.start);
        EXPECT_GT(ws.pending.back().span.end, seed.span.end);
      }
      ws.pending.clear();
      if (!extend_left(seed, ws, ctx)) {
        EXPECT_LT(ws.pending.back().span.start, seed.span.start);
        EXPECT_EQ(ws.pending.back().span.end, seed.span.end);
      }
    }
  }
}

KeySet first_cycle(const LinkStream& s, const Params& p, const EnumerationOptions& o) {
  EnumerationContext ctx{s, p, s.observation().start, o};
  WorkSets ws;
  for (auto& c : seed_cliques(s, p, s.observation())) ws.push(std::move(c), ctx);
  drain_fresh(ws, ctx, s.observation().end);
  return ws.found;
}

TEST(Drain, OrderIndependent) {
  std::array<Step, 3> order{Step::add_vertex, Step::extend_left, Step::extend_right};
  std::sort(order.begin(), order.end());
  for (const auto& inst : testing::corpus(80)) {
    EnumerationOptions base;
    base.audit = &inst.stream;
    const KeySet reference = first_cycle(inst.stream, inst.params, base);
    auto perm = order;
    do {
      for (bool fifo : {false, true}) {
        EnumerationOptions o;
        o.order = perm;
        o.fifo = fifo;
        ASSERT_EQ(first_cycle(inst.stream, inst.params, o), reference) << inst.seed;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

// Fixed point over the seeds plus clamping equals the oracle.
TEST(Drain, CompleteAgainstOracle) {
  for (const auto& inst : testing::corpus(120)) {
    const auto& s = inst.stream;
    KeySet found = first_cycle(s, inst.params, {});
    auto open = brute_force_enumerate(s, inst.params, {}, testing::open_right(s, inst.params));
    ASSERT_EQ(found, open) << inst.seed;
    BatchState state = BatchState::initial(inst.params, s.observation().start);
    state.maximal = found;
    ASSERT_EQ(finalize(state, s.observation().end), brute_force_enumerate(s, inst.params))
        << inst.seed;
  }
}

TEST(WorkSets, AuditRejectsInvalidCliques) {
  Harness h;
  EnumerationOptions o;
  o.audit = &h.stream;
  EnumerationContext ctx{h.stream, h.params, 1, o};
  EXPECT_THROW(h.ws.push({{1, 2, 3}, {1, 5}, nullptr, Provenance::derived}, ctx),
               ContractViolation);
  EXPECT_TRUE(h.ws.push({{1, 2}, {1, 5}, nullptr, Provenance::derived}, ctx));
  EXPECT_FALSE(h.ws.push({{1, 2}, {1, 5}, nullptr, Provenance::derived}, ctx));
  EXPECT_EQ(h.ws.seen.size(), 1u);
}

}  // namespace
}  // namespace eoc
