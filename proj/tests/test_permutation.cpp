#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "apcrucial/notation.hpp"
#include "apcrucial/permutation.hpp"
#include "apcrucial/reference.hpp"

using namespace apcrucial;

namespace {

Permutation P(const char* s) { return parse_notation(s); }

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1}), InvalidInput);
  EXPECT_THROW(Permutation({0, 1}), InvalidInput);
  EXPECT_THROW(Permutation({1, 3}), InvalidInput);
  EXPECT_THROW(Permutation(std::vector<int>{}), InvalidInput);
  EXPECT_NO_THROW(Permutation({3, 1, 2}));
}

TEST(Reduce, WorkedExamples) {
  EXPECT_EQ(reduce(std::vector<int>{2, 7, 5, 4}), P("1432"));
  EXPECT_EQ(reduce(std::vector<int>{1, 2, 3}), P("123"));
  EXPECT_EQ(reduce(std::vector<int>{8, 3, 5}), P("312"));
  EXPECT_EQ(reduce(std::vector<int>{-4, 100, 0}), P("132"));
}

TEST(Reduce, DuplicateEntriesAreInvalid) {
  EXPECT_THROW(reduce(std::vector<int>{4, 2, 4}), InvalidInput);
  EXPECT_THROW(reduce(std::vector<int>{}), InvalidInput);
}

TEST(Symmetries, WorkedExamples) {
  EXPECT_EQ(reverse(P("24135")), P("53142"));
  EXPECT_EQ(complement(P("24135")), P("42531"));
  EXPECT_EQ(reverse(P("1")), P("1"));
  EXPECT_EQ(complement(P("1")), P("1"));
  EXPECT_EQ(reverse_complement(P("216453")), P("423165"));
  EXPECT_EQ(reverse_complement(P("12")), P("12"));
  EXPECT_EQ(reverse_complement(P("21")), P("21"));
}

TEST(Symmetries, InvolutionsAndCommutationOnAllSmallPermutations) {
  for (std::size_t n = 1; n <= 6; ++n) {
    reference::for_each_permutation(n, [](const Permutation& p) {
      ASSERT_EQ(reverse(reverse(p)), p);
      ASSERT_EQ(complement(complement(p)), p);
      ASSERT_EQ(reverse(complement(p)), complement(reverse(p)));
    });
  }
}

TEST(Extensions, WorkedExamples) {
  EXPECT_EQ(extend_right(P("231"), 2), P("3412"));
  EXPECT_EQ(extend_right(P("1"), 2), P("12"));
  EXPECT_EQ(extend_right(P("21"), 3), P("213"));
  EXPECT_EQ(extend_left(P("12"), 3), P("312"));
  EXPECT_EQ(extend_left(P("12"), 2), P("213"));
  EXPECT_EQ(extend_left(P("1"), 1), P("12"));
  EXPECT_EQ(extend_left(P("1"), 2), P("21"));

  EXPECT_EQ(as_set(extensions_right(P("231"))), (std::set<Permutation>{P("3421"), P("3412"), P("2413"), P("2314")}));
  EXPECT_EQ(as_set(extensions_left(P("12"))), (std::set<Permutation>{P("123"), P("213"), P("312")}));
}

TEST(Extensions, OutOfRangeValueIsInvalid) {
  EXPECT_THROW(extend_right(P("21"), 0), InvalidInput);
  EXPECT_THROW(extend_right(P("21"), 4), InvalidInput);
  EXPECT_THROW(extend_left(P("21"), 4), InvalidInput);
}

TEST(Extensions, PrefixReducesBackToParent) {
  for (std::size_t n = 1; n <= 6; ++n) {
    reference::for_each_permutation(n, [n](const Permutation& p) {
      auto all = extensions_right(p);
      ASSERT_EQ(all.size(), n + 1);
      ASSERT_EQ(as_set(all).size(), n + 1);
      for (const auto& e : all) {
        std::vector<int> head(e.begin(), e.end() - 1);
        ASSERT_EQ(reduce(head), p);
      }
      for (const auto& e : extensions_left(p)) {
        std::vector<int> tail(e.begin() + 1, e.end());
        ASSERT_EQ(reduce(tail), p);
      }
    });
  }
}

TEST(Extensions, CountIsNPlusOneForRandomPermutations) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> v(1 + rng() % 20);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation p(v);
    EXPECT_EQ(extensions_right(p).size(), p.size() + 1);
    EXPECT_EQ(extensions_left(p).size(), p.size() + 1);
  }
}

TEST(Notation, ParsesMixedTokens) {
  const auto p = parse_notation("4(13)1(10)6(11)725(12)893(17)(16)(15)(14)");
  EXPECT_EQ(p.vec(), (std::vector<int>{4, 13, 1, 10, 6, 11, 7, 2, 5, 12, 8, 9, 3, 17, 16, 15, 14}));
  EXPECT_EQ(parse_notation("21").vec(), (std::vector<int>{2, 1}));
  EXPECT_EQ(parse_notation("1 (10)9(11)8 2  6574 3 (15)(14)(13)(12)").size(), 15u);
}

TEST(Notation, DistinctErrorKinds) {
  auto kind_of = [](const char* s) {
    try {
      parse_notation(s);
    } catch (const ParseError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error for " << s;
    return ParseError::Kind::malformed_token;
  };
  using K = ParseError::Kind;
  EXPECT_EQ(kind_of("12x"), K::malformed_token);
  EXPECT_EQ(kind_of("1(10"), K::malformed_token);
  EXPECT_EQ(kind_of("()"), K::malformed_token);
  EXPECT_EQ(kind_of("(5)"), K::malformed_token);
  EXPECT_EQ(kind_of(""), K::malformed_token);
  EXPECT_EQ(kind_of("102"), K::zero_value);
  EXPECT_EQ(kind_of("(00)"), K::zero_value);
  EXPECT_EQ(kind_of("1231"), K::duplicate_value);
  EXPECT_EQ(kind_of("13"), K::non_contiguous);
}

TEST(Notation, ErrorPositionPointsAtOffendingToken) {
  try {
    parse_notation("21(10)x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  try {
    parse_notation("12(13)2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);  // 13 > n = 4
  }
}

TEST(Notation, RoundTripOnAllPermutationsUpToEight) {
  for (std::size_t n = 1; n <= 8; ++n) {
    reference::for_each_permutation(n, [](const Permutation& p) {
      const auto s = format_notation(p);
      ASSERT_EQ(parse_notation(s), p);
      ASSERT_EQ(format_notation(parse_notation(s)), s);
    });
  }
}

TEST(Notation, RoundTripOnFixtures) {
  for (const char* s : {"4(13)1(10)6(11)725(12)893(17)(16)(15)(14)", "185926743(12)(11)(10)", "187925463(12)(11)(10)",
                        "1(10)9(11)8265743(15)(14)(13)(12)", "(10)(11)917682543", "(13)(14)(12)(11)198(10)726543",
                        "(14)(15)(13)1(11)(10)(12)98276543", "1(17)9(13)5(15)7(11)3(16)8(12)4(14)6(10)2"}) {
    EXPECT_EQ(format_notation(parse_notation(s)), s);
  }
}

TEST(Notation, FormatsLargeValuesParenthesized) {
  std::vector<int> v(12);
  std::iota(v.rbegin(), v.rend(), 1);
  EXPECT_EQ(format_notation(Permutation(v)), "(12)(11)(10)987654321");
}
