#include <gtest/gtest.h>

#include <algorithm>

#include "apcrucial/notation.hpp"
#include "apcrucial/reference.hpp"
#include "apcrucial/search.hpp"

using namespace apcrucial;

namespace {

Permutation to_perm(std::span<const int> v) { return make_unchecked(std::vector<int>(v.begin(), v.end())); }

std::uint64_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_anti_monotone(3, 3, 1).count, 1u);
  EXPECT_EQ(enumerate_anti_monotone(3, 3, 4).count, 10u);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_anti_monotone(7, 7, n).count, factorial(n));
}

TEST(Enumerate, AntiMonotone33CountsUpToTwelve) {
  const std::uint64_t expected[] = {1, 2, 4, 10, 20, 48, 104, 282, 496, 1066, 2460, 6128};
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(enumerate_anti_monotone(3, 3, n).count, expected[n - 1]) << n;
}

TEST(Enumerate, MatchesFilteringAllPermutations) {
  for (auto [k, l] : {std::pair{3, 3}, {3, 4}, {4, 3}, {4, 5}, {2, 3}}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      std::vector<Permutation> naive, pruned;
      reference::for_each_permutation(n, [&](const Permutation& p) {
        if (reference::is_anti_monotone(p, k, l)) naive.push_back(p);
      });
      const auto r = enumerate_anti_monotone(k, l, n, [&](std::span<const int> v) { pruned.push_back(to_perm(v)); });
      ASSERT_EQ(r.count, naive.size());
      ASSERT_TRUE(std::is_sorted(pruned.begin(), pruned.end()));
      ASSERT_EQ(pruned, naive) << k << "," << l << " n=" << n;
    }
  }
}

TEST(Search, CrucialCountsAndWitnesses) {
  struct Row {
    int k, l;
    std::size_t n;
    std::uint64_t count;
    const char* smallest;
  };
  const Row rows[] = {{3, 3, 5, 0, nullptr},       {3, 3, 6, 6, "216453"},          {3, 3, 7, 8, "2317564"},
                      {3, 3, 8, 34, nullptr},      {3, 3, 9, 0, nullptr},           {3, 3, 10, 40, "329186(10)475"},
                      {3, 4, 8, 16, "14382765"},   {3, 5, 10, 124, "176(10)529843"}};
  for (const auto& r : rows) {
    const auto rec = count_crucial(r.k, r.l, r.n);
    EXPECT_TRUE(rec.complete);
    EXPECT_EQ(rec.count, r.count) << r.k << "," << r.l << " n=" << r.n;
    EXPECT_EQ(rec.exists, r.count > 0);
    if (r.smallest) {
      ASSERT_TRUE(rec.witness.has_value());
      EXPECT_EQ(format_notation(*rec.witness), r.smallest);
    }
  }
}

TEST(Search, SmallestWitnessAt216453) {
  // 216453 is the lexicographically smallest (3,3)-crucial permutation of length 6.
  const auto r = exists_crucial(3, 3, 6);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(*r.witness, parse_notation("216453"));
}

TEST(Search, BicrucialCounts) {
  EXPECT_EQ(count_bicrucial(3, 3, 7).count, 0u);
  const auto r8 = count_bicrucial(3, 3, 8);
  EXPECT_EQ(r8.count, 34u);
  EXPECT_EQ(format_notation(*r8.witness), "16572438");
  EXPECT_EQ(count_bicrucial(3, 4, 8).count, 0u);
  const auto r9 = count_bicrucial(3, 4, 9);
  EXPECT_EQ(r9.count, 40u);
  EXPECT_EQ(format_notation(*r9.witness), "786592431");
  EXPECT_EQ(count_bicrucial(4, 3, 9).count, 40u);
}

TEST(Search, ExistsAgreesWithCount) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto e = exists_crucial(3, 3, n);
    const auto c = count_crucial(3, 3, n);
    EXPECT_EQ(e.exists, c.exists) << n;
    EXPECT_FALSE(e.count.has_value());
    EXPECT_EQ(e.witness, c.witness) << n;
  }
}

TEST(Search, WitnessesReverifyWithBruteForce) {
  for (auto [k, l, n] : {std::tuple{3, 3, 6}, {3, 3, 7}, {3, 4, 8}, {4, 3, 8}}) {
    std::uint64_t seen = 0;
    const auto r = count_of_kind(k, l, static_cast<std::size_t>(n), SearchKind::crucial, {},
                                 [&, k = k, l = l](std::span<const int> v) {
                                   ++seen;
                                   ASSERT_TRUE(reference::is_crucial(to_perm(v), k, l));
                                 });
    EXPECT_EQ(seen, r.count);
  }
  const auto b = exists_bicrucial(3, 4, 9);
  ASSERT_TRUE(b.witness);
  EXPECT_TRUE(reference::is_bicrucial(*b.witness, 3, 4));
}

TEST(Search, DeterministicAcrossThreadCounts) {
  for (auto [k, l, n] : {std::tuple{3, 3, 10}, {3, 4, 10}, {3, 5, 10}, {3, 3, 12}}) {
    const auto one = count_crucial(k, l, static_cast<std::size_t>(n), {0, {}, 1});
    const auto four = count_crucial(k, l, static_cast<std::size_t>(n), {0, {}, 4});
    EXPECT_EQ(one.count, four.count);
    EXPECT_EQ(one.witness, four.witness);
    EXPECT_EQ(one.nodes, four.nodes);
    const auto e1 = exists_crucial(k, l, static_cast<std::size_t>(n), {0, {}, 1});
    const auto e4 = exists_crucial(k, l, static_cast<std::size_t>(n), {0, {}, 4});
    EXPECT_EQ(e1.exists, e4.exists);
    EXPECT_EQ(e1.witness, e4.witness);
  }
}

TEST(Search, BudgetExhaustionIsNeverANegative) {
  const auto r = count_crucial(3, 3, 12, {50, {}, 1});
  EXPECT_FALSE(r.complete);
  EXPECT_GE(r.nodes, 50u);
  const auto m = find_minimal_crucial(4, 4, std::nullopt, {100, {}, 1});
  EXPECT_FALSE(m.complete);
  EXPECT_FALSE(m.found.has_value());
  EXPECT_FALSE(m.last_settled.has_value());
}

TEST(Search, MinimalLengths) {
  const auto c33 = find_minimal_crucial(3, 3, std::size_t{1});
  EXPECT_EQ(c33.found, 6u);
  EXPECT_EQ(c33.records.size(), 6u);
  EXPECT_EQ(find_minimal_crucial(3, 4, std::size_t{1}).found, 8u);
  EXPECT_EQ(find_minimal_crucial(4, 3, std::size_t{1}).found, 8u);
  EXPECT_EQ(find_minimal_bicrucial(3, 3).found, 8u);
  EXPECT_EQ(find_minimal_bicrucial(3, 4).found, 9u);
  const auto none = find_minimal(3, 3, SearchKind::crucial, std::size_t{1}, std::size_t{5});
  EXPECT_TRUE(none.complete);
  EXPECT_FALSE(none.found);
  EXPECT_EQ(none.last_settled, 5u);
}

TEST(Search, KindNames) {
  for (auto k : {SearchKind::anti, SearchKind::crucial, SearchKind::bicrucial})
    EXPECT_EQ(parse_search_kind(to_string(k)), k);
  EXPECT_THROW(parse_search_kind("bogus"), InvalidInput);
}
