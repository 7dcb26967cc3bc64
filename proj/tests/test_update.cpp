#include <gtest/gtest.h>

#include "eoc/errors.hpp"
#include "eoc/oracle.hpp"
#include "eoc/update.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace eoc {
namespace {

using testing::f1;
using testing::run_batches;
using testing::run_offline;
using testing::run_partitioned;

CliqueKey key(VertexSet z, Timestamp a, Timestamp b) { return make_key(std::move(z), {a, b}); }

TEST(UpdateBatch, FirstCycleIsOfflineEnumeration) {
  auto s = f1();
  auto state = BatchState::initial({3, 2}, 1);
  auto [next, report] = update_batch(state, s.links(), 5);
  EXPECT_EQ(next.boundary, 5);
  EXPECT_EQ(report.checked, 0u);
  EXPECT_EQ(report.removed, 0u);
  EXPECT_EQ(report.carried, 0u);
  EXPECT_EQ(finalize(next, 5), brute_force_enumerate(s, {3, 2}));
  // Frozen oracle output for F1 at Δ=3, γ=2.
  EXPECT_EQ(finalize(next, 5), (KeySet{key({1, 2}, 1, 5), key({1, 3}, 1, 5), key({1, 2, 3}, 2, 5)}));
}

TEST(UpdateBatch, F1SplitMatchesOffline) {
  auto s = f1();
  EXPECT_EQ(run_partitioned(s, {3, 2}, {3, 5}), run_offline(s, {3, 2}));
  for (Timestamp d = 1; d <= 4; ++d) {
    for (std::uint32_t g = 1; g <= 3; ++g) {
      for (auto bounds : std::vector<std::vector<Timestamp>>{{1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 3, 5}, {1, 2, 3, 4, 5}}) {
        EXPECT_EQ(run_partitioned(s, {d, g}, bounds), brute_force_enumerate(s, {d, g}));
      }
    }
  }
}

TEST(UpdateBatch, SplitFixtureDecomposes) {
  auto s = testing::split_fixture();
  const Params p{4, 2};
  const KeySet before{key({1, 2}, 2, 11), key({2, 3}, 4, 13), key({3, 4}, 1, 9)};
  const KeySet after{key({1, 2}, 12, 21), key({1, 3}, 11, 20), key({1, 2, 3}, 12, 20)};
  const CliqueKey across = key({3, 4}, 8, 16);

  KeySet all = before;
  all.insert(after.begin(), after.end());
  all.insert(across);
  ASSERT_EQ(brute_force_enumerate(s, p), all);
  EXPECT_EQ(run_offline(s, p), all);

  auto first = update_batch(BatchState::initial(p, 1), s.links_in({1, 12}), 12).first;
  for (const auto& k : before) EXPECT_TRUE(first.maximal.contains(k)) << to_string(k);
  EXPECT_FALSE(first.maximal.contains(across));
  // The crossing clique is still open at the boundary.
  EXPECT_TRUE(first.frontier.contains(key({3, 4}, 8, 12)));
  EXPECT_GE(across.span.start, 12 - p.delta);
  EXPECT_LE(across.span.end, 12 + p.delta);

  auto [second, report] = update_batch(first, s.links_in({13, 21}), 21);
  for (const auto& k : after) EXPECT_TRUE(second.maximal.contains(k)) << to_string(k);
  EXPECT_EQ(finalize(second, 21), all);
  EXPECT_GT(report.removed, 0u);
}

TEST(UpdateBatch, RejectsOutOfRangeLinks) {
  auto s = f1();
  auto state = update_batch(BatchState::initial({3, 2}, 1), s.links_in({1, 3}), 3).first;
  EXPECT_THROW(update_batch(state, s.links_in({2, 5}), 5), RangeError);
  EXPECT_THROW(update_batch(state, s.links_in({4, 5}), 4), RangeError);
  EXPECT_THROW(update_batch(state, s.links_in({4, 5}), 3), ConfigError);
  EXPECT_THROW(update_batch(BatchState::initial({3, 2}, 2), s.links(), 5), RangeError);
  try {
    update_batch(state, {{1, 2, 9}}, 5);
    FAIL();
  } catch (const RangeError& e) {
    EXPECT_EQ(e.timestamp(), 9);
  }
  EXPECT_THROW(BatchState::initial({0, 2}, 1), ConfigError);
  EXPECT_THROW(BatchState::initial({2, 0}, 1), ConfigError);
}

TEST(UpdateBatch, StateInvariants) {
  for (const auto& inst : testing::corpus(60)) {
    const auto& s = inst.stream;
    const auto& p = inst.params;
    auto bounds = testing::random_boundaries(s, inst.seed);
    auto state = BatchState::initial(p, s.observation().start);
    Timestamp prev = s.observation().start - 1;
    for (Timestamp b : bounds) {
      auto e = enumerate_cycle(state, s.links_in({prev + 1, b}), b);
      // The cycle sees nothing older than the previous boundary minus Δ.
      if (state.boundary) {
        EXPECT_GE(e.visible.visible_from(), *state.boundary - p.delta);
        for (const auto& l : e.visible.links()) EXPECT_GE(l.t, *state.boundary - p.delta);
      }
      state = update_batch(state, s.links_in({prev + 1, b}), b).first;
      for (const auto& [k, cand] : state.frontier) EXPECT_GE(k.span.end, b);
      EXPECT_EQ(state.link_tail, s.links_in({b - p.delta, b}));
      prev = b;
    }
  }
}

TEST(UpdateBatch, EquivalentToOfflineOnRandomSplits) {
  for (const auto& inst : testing::corpus(100)) {
    EnumerationOptions o;
    o.audit = &inst.stream;
    auto offline = run_offline(inst.stream, inst.params);
    for (std::uint64_t r = 0; r < 3; ++r) {
      auto bounds = testing::random_boundaries(inst.stream, inst.seed * 7 + r);
      ASSERT_EQ(run_partitioned(inst.stream, inst.params, bounds, o), offline)
          << "seed " << inst.seed << " split " << r;
    }
  }
}

// Before removal the union may hold extra cliques but misses none; after
// removal it is exactly the maximal set of the links seen so far.
TEST(UpdateBatch, RemovalStaging) {
  for (const auto& inst : testing::corpus(80)) {
    const auto& s = inst.stream;
    const auto& p = inst.params;
    auto bounds = testing::random_boundaries(s, inst.seed);
    if (bounds.size() < 2) continue;
    auto state = run_batches(s, p, {bounds.begin(), bounds.end() - 1});
    const Timestamp last = bounds.back();
    LinkList batch = s.links_in({*state.boundary + 1, last});

    auto e = enumerate_cycle(state, batch, last);
    KeySet carried;
    for (const auto& k : state.maximal) {
      if (!state.frontier.contains(k)) carried.insert(k);
    }
    KeySet pre = e.found;
    pre.insert(carried.begin(), carried.end());
    auto truth = brute_force_enumerate(s, p, {}, testing::open_right(s, p));
    for (const auto& k : truth) ASSERT_TRUE(pre.contains(k)) << inst.seed << ' ' << to_string(k);

    remove_sub_cliques(e.found, state.boundary);
    KeySet post = e.found;
    post.insert(carried.begin(), carried.end());
    ASSERT_EQ(post, truth) << inst.seed;
  }
}

TEST(UpdateBatch, DroppingTheFrontierBreaksEquivalence) {
  auto s = testing::split_fixture();
  const Params p{4, 2};
  auto first = update_batch(BatchState::initial(p, 1), s.links_in({1, 12}), 12).first;
  ASSERT_FALSE(first.frontier.empty());
  auto expected = finalize(update_batch(first, s.links_in({13, 21}), 21).first, 21);
  for (const auto& [k, cand] : first.frontier) {
    auto mutated = first;
    mutated.frontier.erase(k);
    auto got = finalize(update_batch(mutated, s.links_in({13, 21}), 21).first, 21);
    if (got == expected) continue;
    SUCCEED() << "dropping " << to_string(k) << " changes the result";
    return;
  }
  FAIL() << "no single frontier clique was needed";
}

TEST(UpdateBatch, DroppingTheFrontierBreaksSomeRandomInstance) {
  std::size_t broken = 0;
  for (const auto& inst : testing::corpus(60)) {
    const auto& s = inst.stream;
    const Timestamp mid = (s.observation().start + s.observation().end) / 2;
    if (mid >= s.observation().end) continue;
    auto first = run_batches(s, inst.params, {mid});
    if (first.frontier.empty()) continue;
    first.frontier.clear();
    auto got = finalize(update_batch(first, s.links_in({mid + 1, s.observation().end}),
                                     s.observation().end).first,
                        s.observation().end);
    broken += got != run_offline(s, inst.params);
  }
  EXPECT_GT(broken, 0u);
}

TEST(UpdateBatch, CarriedCliquesOnlyGrowRight) {
  auto s = testing::split_fixture();
  const Params p{4, 2};
  auto first = update_batch(BatchState::initial(p, 1), s.links_in({1, 12}), 12).first;
  LinkStream visible = LinkStream::from_links(s.links_in({8, 21}), Interval{1, 21}, Timestamp{8});
  EnumerationContext ctx{visible, p, 1};
  WorkSets ws;
  for (const auto& [k, cand] : first.frontier) ws.push({k.vertices, k.span, cand, Provenance::carried}, ctx);
  drain_carried(ws, ctx, 21);
  for (const auto& c : ws.pending) EXPECT_EQ(c.provenance, Provenance::carried);
  for (const auto& k : ws.seen) {
    bool from_frontier = false;
    for (const auto& [f, cand] : first.frontier) {
      from_frontier |= f.vertices == k.vertices && f.span.start == k.span.start && f.span.end <= k.span.end;
    }
    EXPECT_TRUE(from_frontier) << to_string(k);
  }
}

TEST(RemoveSubCliques, Examples) {
  KeySet a{key({1, 2}, 3, 9), key({1, 2}, 4, 8)};
  auto st = remove_sub_cliques(a, 5);
  EXPECT_EQ(a, (KeySet{key({1, 2}, 3, 9)}));
  EXPECT_EQ(st.removed, 1u);
  EXPECT_EQ(st.checked, 2u);

  KeySet b{key({1, 2, 3}, 4, 8), key({1, 2}, 4, 8)};
  remove_sub_cliques(b, 5);
  EXPECT_EQ(b, (KeySet{key({1, 2, 3}, 4, 8)}));

  KeySet c{key({1, 2}, 3, 9), key({1, 2}, 4, 8), key({1, 2, 3}, 4, 8)};
  KeySet copy = c;
  EXPECT_EQ(remove_sub_cliques(c, std::nullopt).checked, 0u);
  EXPECT_EQ(c, copy);

  // Only cliques starting at or before the previous boundary are checked.
  KeySet d{key({1, 2}, 3, 9), key({1, 2}, 6, 8)};
  remove_sub_cliques(d, 5);
  EXPECT_EQ(d.size(), 2u);
}

TEST(Finalize, Examples) {
  auto s = f1();
  auto state = update_batch(BatchState::initial({3, 2}, 1), s.links(), 5).first;
  BatchState closed = state;
  closed.frontier.clear();
  for (auto it = closed.maximal.begin(); it != closed.maximal.end();) {
    it = it->span.end > 5 ? closed.maximal.erase(it) : std::next(it);
  }
  EXPECT_EQ(finalize(closed, 5), closed.maximal);

  BatchState twins = BatchState::initial({3, 2}, 1);
  twins.maximal = {key({1, 2}, 1, 6), key({1, 2}, 1, 7)};
  EXPECT_EQ(finalize(twins, 5), (KeySet{key({1, 2}, 1, 5)}));

  BatchState swallowed = BatchState::initial({3, 2}, 1);
  swallowed.maximal = {key({1, 2}, 2, 7), key({1, 2, 3}, 2, 5)};
  EXPECT_EQ(finalize(swallowed, 5), (KeySet{key({1, 2, 3}, 2, 5)}));

  BatchState late = BatchState::initial({3, 2}, 1);
  late.maximal = {key({1, 2}, 6, 9)};
  EXPECT_THROW(finalize(late, 5), ContractViolation);
}

TEST(Finalize, CertifiedMaximal) {
  for (const auto& inst : testing::corpus(40)) {
    auto result = run_offline(inst.stream, inst.params);
    EXPECT_TRUE(uncertified(result, inst.stream, inst.params).empty()) << inst.seed;
    for (const auto& k : result) {
      if (k.span.end > k.span.start) {
        KeySet shorter{{{k.span.start, k.span.end - 1}, k.vertices}};
        EXPECT_FALSE(uncertified(shorter, inst.stream, inst.params).empty());
      }
    }
  }
}

}  // namespace
}  // namespace eoc
