#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "apcrucial/notation.hpp"
#include "apcrucial/pattern.hpp"
#include "apcrucial/reference.hpp"

using namespace apcrucial;

namespace {

Permutation P(const char* s) { return parse_notation(s); }

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST(RunTable, Examples) {
  EXPECT_EQ(RunTable(P("12345")).up(5, 1), 5u);

  const RunTable t(P("216453"));
  EXPECT_EQ(t.max_up(), 2u);
  EXPECT_EQ(t.max_down(), 2u);

  // Positions 1,3,5 of 24135 hold 2,1,5: the increasing run ending at 5 is 1,5.
  EXPECT_EQ(RunTable(P("24135")).up(5, 2), 2u);
}

TEST(RunTable, RecurrenceAndBoundHoldOnRandomPermutations) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_perm(1 + rng() % 14, rng);
    const RunTable t(p);
    const std::size_t n = p.size();
    for (std::size_t d = 1; d < n; ++d) {
      for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t up = i > d && p[i - d - 1] < p[i - 1] ? t.up(i - d, d) + 1 : 1;
        const std::size_t down = i > d && p[i - d - 1] > p[i - 1] ? t.down(i - d, d) + 1 : 1;
        ASSERT_EQ(t.up(i, d), up);
        ASSERT_EQ(t.down(i, d), down);
        ASSERT_LE(t.up(i, d), (i + d - 1) / d);
        ASSERT_LE(t.down(i, d), (i + d - 1) / d);
      }
    }
  }
}

TEST(RunTable, RemovingLastElementNeverIncreasesRuns) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_perm(2 + rng() % 12, rng);
    const RunTable full(p);
    std::vector<int> head(p.begin(), p.end() - 1);
    const RunTable cut(reduce(head));
    for (std::size_t d = 1; d + 1 < p.size(); ++d)
      for (std::size_t i = 1; i < p.size(); ++i) {
        ASSERT_LE(cut.up(i, d), full.up(i, d));
        ASSERT_LE(cut.down(i, d), full.down(i, d));
      }
  }
}

TEST(RunTable, RankInvariant) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_perm(1 + rng() % 12, rng);
    std::vector<int> spread;
    for (int v : p) spread.push_back(v * 7 - 100);
    const RunTable a(p), b(reduce(spread));
    for (std::size_t d = 1; d < p.size(); ++d)
      for (std::size_t i = 1; i <= p.size(); ++i) {
        ASSERT_EQ(a.up(i, d), b.up(i, d));
        ASSERT_EQ(a.down(i, d), b.down(i, d));
      }
  }
}

TEST(RunTable, ExtensionRunsMatchRebuiltTable) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_perm(1 + rng() % 10, rng);
    const RunTable t(p);
    for (int x = 1; x <= static_cast<int>(p.size()) + 1; ++x) {
      const RunTable e(extend_right(p, x));
      for (std::size_t d = 1; d <= p.size(); ++d) {
        ASSERT_EQ(t.extension_up(x, d), e.up(p.size() + 1, d));
        ASSERT_EQ(t.extension_down(x, d), e.down(p.size() + 1, d));
      }
    }
  }
}

TEST(Occurrences, Examples) {
  auto occ = arithmetic_occurrences(P("123"), Direction::up, 3);
  ASSERT_EQ(occ.size(), 1u);
  EXPECT_EQ(occ[0].positions(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(occ[0].difference, 1u);

  EXPECT_TRUE(arithmetic_occurrences(P("216453"), Direction::up, 3).empty());
  EXPECT_TRUE(arithmetic_occurrences(P("216453"), Direction::down, 3).empty());
  EXPECT_TRUE(arithmetic_occurrences(P("73418562"), Direction::down, 3).empty());
  EXPECT_TRUE(arithmetic_occurrences(P("73418562"), Direction::up, 3).empty());
}

TEST(Occurrences, EquivalentToBruteForceOnRandomPermutations) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_perm(1 + rng() % 12, rng);
    const RunTable t(p);
    for (auto dir : {Direction::up, Direction::down}) {
      for (std::size_t m = 1; m <= p.size() + 1; ++m) {
        auto fast = arithmetic_occurrences(t, dir, m);
        auto slow = reference::occurrences(p, dir, m);
        std::sort(fast.begin(), fast.end());
        std::sort(slow.begin(), slow.end());
        ASSERT_EQ(fast, slow) << format_notation(p) << " m=" << m;
      }
    }
  }
}

TEST(AntiMonotone, Examples) {
  EXPECT_TRUE(is_anti_monotone(P("216453"), 3, 3));
  EXPECT_FALSE(is_anti_monotone(P("123"), 3, 3));
  EXPECT_THROW(is_anti_monotone(P("123"), 1, 3), DomainError);

  int count = 0;
  reference::for_each_permutation(4, [&](const Permutation& p) { count += is_anti_monotone(p, 3, 3); });
  EXPECT_EQ(count, 10);
}

TEST(AntiMonotone, ScanAndTableAgreeWithBruteForce) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_perm(1 + rng() % 12, rng);
    const int k = 2 + static_cast<int>(rng() % 4);
    const int l = 2 + static_cast<int>(rng() % 4);
    const bool expect = reference::is_anti_monotone(p, k, l);
    ASSERT_EQ(is_anti_monotone(p, k, l), expect);
    ASSERT_EQ(is_anti_monotone(RunTable(p), k, l), expect);
    if (auto occ = find_monotone_occurrence(p, k, l)) {
      const auto all = reference::occurrences(p, occ->direction, occ->length);
      ASSERT_NE(std::find(all.begin(), all.end(), *occ), all.end());
    }
  }
}

TEST(PrefixRuns, RejectsExactlyTheViolatingAppends) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_perm(1 + rng() % 10, rng);
    PrefixRuns runs(p.size(), 3, 4);
    std::vector<int> prefix;
    for (int v : p) {
      prefix.push_back(v);
      const bool ok = reference::is_anti_monotone(reduce(prefix), 3, 4);
      ASSERT_EQ(runs.push(v), ok);
      if (!ok) break;
    }
  }
}
