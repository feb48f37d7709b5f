#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "apcrucial/constructions.hpp"
#include "apcrucial/crucial.hpp"
#include "apcrucial/notation.hpp"
#include "apcrucial/permutation.hpp"
#include "apcrucial/search.hpp"

namespace apcrucial {

// A checked statement. Published facts come from the literature on these
// permutations; the rest are values this engine computed and pins as
// regression fixtures.
struct Fact {
  std::string id;
  std::string statement;
  bool published = true;
  bool passed = false;
  std::string detail;
};

struct FactOptions {
  bool include_stretch = false;  // m(4,4) = 12 by search
  SearchBudget budget{};
};

namespace detail {

inline std::string set_string(const std::vector<Permutation>& ps) {
  std::string s = "{";
  for (const auto& p : ps) s += (s.size() > 1 ? "," : "") + format_notation(p);
  return s + "}";
}

inline Fact minimal_fact(const std::string& id, int k, int l, SearchKind kind, std::size_t expected,
                         const SearchBudget& budget, bool published) {
  Fact f;
  f.id = id;
  f.published = published;
  f.statement = std::string("minimal ") + kl(k, l) + "-" + to_string(kind) + " length is " + std::to_string(expected);
  // Scan from 1 so the absence of shorter witnesses is checked as well.
  auto r = find_minimal(k, l, kind, std::size_t{1}, expected + 1, budget);
  f.passed = r.complete && r.found && *r.found == expected;
  f.detail = r.found ? "first witness at n = " + std::to_string(*r.found) + ": " +
                           format_notation(*r.records.back().witness)
                     : (r.complete ? "no witness up to n = " + std::to_string(expected + 1) : "budget exhausted");
  return f;
}

}  // namespace detail

inline std::vector<Fact> verify_paper_facts(const FactOptions& opts = {}) {
  std::vector<Fact> facts;
  auto add = [&](std::string id, std::string statement, bool published, const std::function<bool(std::string&)>& check) {
    Fact f{std::move(id), std::move(statement), published, false, {}};
    try {
      f.passed = check(f.detail);
    } catch (const std::exception& e) {
      f.passed = false;
      f.detail = std::string("error: ") + e.what();
    }
    facts.push_back(std::move(f));
  };
  const auto& b = opts.budget;

  add("crucial-216453", "216453 is (3,3)-crucial", true,
      [](std::string&) { return is_crucial(parse_notation("216453"), 3, 3); });
  add("bicrucial-73418562", "73418562 is (3,3)-bicrucial", true,
      [](std::string&) { return is_bicrucial(parse_notation("73418562"), 3, 3); });
  add("reduce-2754", "reduced form of 2754 is 1432", true,
      [](std::string& d) {
        auto r = reduce(std::vector<int>{2, 7, 5, 4});
        d = format_notation(r);
        return d == "1432";
      });
  add("reverse-complement-24135", "r(24135) = 53142 and c(24135) = 42531", true, [](std::string& d) {
    const auto p = parse_notation("24135");
    d = format_notation(reverse(p)) + " " + format_notation(complement(p));
    return d == "53142 42531";
  });
  add("extensions", "right extensions of 231 are {3421,3412,2413,2314}; left extensions of 12 are {123,213,312}",
      true, [](std::string& d) {
        auto right = extensions_right(parse_notation("231"));
        auto left = extensions_left(parse_notation("12"));
        d = detail::set_string(right) + " " + detail::set_string(left);
        std::set<Permutation> rs(right.begin(), right.end()), ls(left.begin(), left.end());
        return rs == std::set<Permutation>{parse_notation("3421"), parse_notation("3412"), parse_notation("2413"),
                                           parse_notation("2314")} &&
               ls == std::set<Permutation>{parse_notation("123"), parse_notation("213"), parse_notation("312")};
      });
  add("block-layout-example", "block layout of 1(17)9(13)5(15)7(11)3(16)8(12)4(14)6(10)2 with k=4, l=5 is "
                              "4(13)1(10)6(11)725(12)893(17)(16)(15)(14)",
      true, [](std::string& d) {
        d = format_notation(figure1_layout(4, 5, parse_notation("1(17)9(13)5(15)7(11)3(16)8(12)4(14)6(10)2")));
        return d == "4(13)1(10)6(11)725(12)893(17)(16)(15)(14)";
      });
  add("crucial-44", "185926743(12)(11)(10) is (4,4)-crucial of length 12", true, [](std::string&) {
    const auto p = parse_notation("185926743(12)(11)(10)");
    return p.size() == 12 && is_crucial(p, 4, 4);
  });
  add("crucial-4l", "187925463(12)(11)(10) is (4,4)-crucial and 1(10)9(11)8265743(15)(14)(13)(12) is (4,5)-crucial",
      true, [](std::string&) {
        return is_crucial(parse_notation("187925463(12)(11)(10)"), 4, 4) &&
               is_crucial(parse_notation("1(10)9(11)8265743(15)(14)(13)(12)"), 4, 5);
      });
  add("bicrucial-3l", "(10)(11)917682543, (13)(14)(12)(11)198(10)726543, (14)(15)(13)1(11)(10)(12)98276543 are "
                      "(3,l)-bicrucial for l = 4, 5, 6",
      true, [](std::string&) {
        return is_bicrucial(parse_notation("(10)(11)917682543"), 3, 4) &&
               is_bicrucial(parse_notation("(13)(14)(12)(11)198(10)726543"), 3, 5) &&
               is_bicrucial(parse_notation("(14)(15)(13)1(11)(10)(12)98276543"), 3, 6);
      });
  facts.push_back(detail::minimal_fact("m(3,3)", 3, 3, SearchKind::crucial, 6, b, true));
  facts.push_back(detail::minimal_fact("m(3,4)", 3, 4, SearchKind::crucial, 8, b, true));
  facts.push_back(detail::minimal_fact("m(4,3)", 4, 3, SearchKind::crucial, 8, b, true));
  facts.push_back(detail::minimal_fact("m(3,5)", 3, 5, SearchKind::crucial, 10, b, true));
  if (opts.include_stretch) {
    add("m(4,4)", "a (4,4)-crucial permutation of length 12 exists (lower bound 12)", true, [&](std::string& d) {
      auto r = find_minimal(4, 4, SearchKind::crucial, std::nullopt, std::nullopt, b);
      if (r.found) d = format_notation(*r.records.back().witness);
      return r.complete && r.found && *r.found == 12;
    });
  }
  add("no-crucial-33-9", "no (3,3)-crucial permutation of length 9", true, [&](std::string& d) {
    auto r = exists_crucial(3, 3, 9, b);
    d = "nodes " + std::to_string(r.nodes);
    return r.complete && !r.exists;
  });
  facts.push_back(detail::minimal_fact("min-bicrucial(3,3)", 3, 3, SearchKind::bicrucial, 8, b, true));
  add("crucial-8-bicrucial", "every (3,3)-crucial permutation of length 8 is (3,3)-bicrucial", true,
      [&](std::string& d) {
        std::uint64_t crucial = 0, bi = 0;
        auto rec = count_of_kind(3, 3, 8, SearchKind::crucial, b, [&](std::span<const int> p) {
          ++crucial;
          if (is_bicrucial(make_unchecked(std::vector<int>(p.begin(), p.end())), 3, 3)) ++bi;
        });
        d = std::to_string(bi) + " of " + std::to_string(crucial) + " are bicrucial";
        return rec.complete && crucial > 0 && bi == crucial;
      });

  // Computed here, not published.
  add("crucial-33-7", "a (3,3)-crucial permutation of length 7 exists (8 of them; smallest 2317564)", false,
      [&](std::string& d) {
        auto r = count_crucial(3, 3, 7, b);
        d = r.witness ? format_notation(*r.witness) + ", count " + std::to_string(r.count.value_or(0)) : "none";
        return r.complete && r.count == 8u && r.witness && format_notation(*r.witness) == "2317564";
      });
  facts.push_back(detail::minimal_fact("min-bicrucial(3,4)", 3, 4, SearchKind::bicrucial, 9, b, false));
  add("block-layout-k4-not-anti-monotone",
      "the k=4, l=5 block layout example contains an arithmetic 1234 (positions 3,7,11,15)", false,
      [](std::string& d) {
        auto p = parse_notation("4(13)1(10)6(11)725(12)893(17)(16)(15)(14)");
        auto occ = find_monotone_occurrence(p, 4, 5);
        if (occ) d = describe(*occ, p);
        return occ && occ->direction == Direction::up && occ->positions() == std::vector<std::size_t>{3, 7, 11, 15};
      });
  return facts;
}

}  // namespace apcrucial
