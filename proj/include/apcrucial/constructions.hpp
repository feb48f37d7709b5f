#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "apcrucial/crucial.hpp"
#include "apcrucial/errors.hpp"
#include "apcrucial/notation.hpp"
#include "apcrucial/pattern.hpp"
#include "apcrucial/permutation.hpp"

namespace apcrucial {

// A construction produced a permutation that fails its target predicate.
// The rejected candidate is kept for diagnostics; it is never returned as a
// result.
class ConstructionInvalid : public Error {
 public:
  ConstructionInvalid(const std::string& what, Permutation candidate)
      : Error(what), candidate_(std::move(candidate)) {}
  const Permutation& candidate() const noexcept { return candidate_; }

 private:
  Permutation candidate_;
};

// m(k, l) = max(k, l) * (min(k, l) - 1), the minimal crucial length.
inline std::size_t minimal_length_formula(int k, int l) {
  if (k < 3 || l < 3) throw DomainError("minimal length is defined for k, l >= 3");
  return static_cast<std::size_t>(std::max(k, l)) * static_cast<std::size_t>(std::min(k, l) - 1);
}

namespace detail {

inline std::string failure_reason(const Permutation& p, int k, int l, bool need_left) {
  if (auto occ = find_monotone_occurrence(p, k, l)) return "contains arithmetic " + describe(*occ, p);
  auto list = [](const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  auto right = surviving_right_extensions(RunTable(p), k, l);
  if (!right.empty()) return "right extensions by {" + list(right) + "} stay anti-monotone";
  if (need_left) {
    auto left = surviving_right_extensions(RunTable(reverse(p)), l, k);
    if (!left.empty()) return "left extensions by {" + list(left) + "} stay anti-monotone";
  }
  return "predicate failed";
}

inline std::string kl(int k, int l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

inline Permutation ensure_crucial(Permutation p, int k, int l, const std::string& what) {
  if (!is_crucial(p, k, l))
    throw ConstructionInvalid(what + ": output " + format_notation(p) + " is not " + kl(k, l) +
                                  "-crucial: " + failure_reason(p, k, l, false),
                              p);
  return p;
}

inline Permutation ensure_bicrucial(Permutation p, int k, int l, const std::string& what) {
  if (!is_bicrucial(p, k, l))
    throw ConstructionInvalid(what + ": output " + format_notation(p) + " is not " + kl(k, l) +
                                  "-bicrucial: " + failure_reason(p, k, l, true),
                              p);
  return p;
}

// Places `odd` at positions 1,3,5,... and `even` at 2,4,... (1-based),
// shifting whichever side is `high` above the other.
inline Permutation interleave(const Permutation& odd, const Permutation& even, bool odd_is_high) {
  const int shift_odd = odd_is_high ? static_cast<int>(even.size()) : 0;
  const int shift_even = odd_is_high ? 0 : static_cast<int>(odd.size());
  std::vector<int> out;
  out.reserve(odd.size() + even.size());
  for (std::size_t i = 0; i < odd.size(); ++i) {
    out.push_back(odd[i] + shift_odd);
    if (i < even.size()) out.push_back(even[i] + shift_even);
  }
  return make_unchecked(std::move(out));
}

}  // namespace detail

// (p1+n) t1 (p2+n) t2 ... (pn+n) tn.
inline Permutation shuffle_down(const Permutation& p, const Permutation& t) {
  if (p.size() != t.size())
    throw InvalidInput("shuffle_down: lengths differ (" + std::to_string(p.size()) + " vs " +
                       std::to_string(t.size()) + ")");
  return detail::interleave(p, t, true);
}

// (p1+n-1) t1 (p2+n-1) t2 ... t_{n-1} (pn+n-1), for |t| = |p| - 1.
inline Permutation shuffle_down_odd(const Permutation& p, const std::optional<Permutation>& t) {
  const std::size_t tn = t ? t->size() : 0;
  if (tn + 1 != p.size())
    throw InvalidInput("shuffle_down_odd: need |t| = |p| - 1 (got " + std::to_string(p.size()) + " and " +
                       std::to_string(tn) + ")");
  if (!t) return p;
  return detail::interleave(p, *t, true);
}

// (3,3)-anti-monotone permutation of length n from the shuffle-down
// recursion f(1)=1, f(2)=21, f(2m)=sd(f(m),f(m)), f(2m-1)=sd_odd(f(m),f(m-1)).
inline Permutation anti_monotone_33(std::size_t n) {
  if (n == 0) throw DomainError("anti_monotone_33: n must be >= 1");
  std::map<std::size_t, Permutation> memo;
  std::function<const Permutation&(std::size_t)> f = [&](std::size_t m) -> const Permutation& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    Permutation r = m == 1 ? Permutation{1}
                  : m == 2 ? Permutation{2, 1}
                  : m % 2 == 0 ? shuffle_down(f(m / 2), f(m / 2))
                               : shuffle_down_odd(f((m + 1) / 2), f((m + 1) / 2 - 1));
    return memo.emplace(m, std::move(r)).first->second;
  };
  return f(n);
}

// Randomized member of the same family: every shuffle step applies an
// independent symmetry (identity, r, c, rc) to each half. All outputs are
// (3,3)-anti-monotone.
template <typename Rng>
Permutation random_anti_monotone_33(std::size_t n, Rng& rng) {
  if (n == 0) throw DomainError("random_anti_monotone_33: n must be >= 1");
  auto sym = [&](Permutation p) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 1: return reverse(p);
      case 2: return complement(p);
      case 3: return reverse_complement(p);
      default: return p;
    }
  };
  if (n == 1) return Permutation{1};
  if (n == 2) return sym(Permutation{2, 1});
  const std::size_t m = (n + 1) / 2;
  if (n % 2 == 0) return sym(shuffle_down(random_anti_monotone_33(m, rng), random_anti_monotone_33(m, rng)));
  return sym(shuffle_down_odd(random_anti_monotone_33(m, rng), random_anti_monotone_33(m - 1, rng)));
}

// The value layout of the block construction, without verification.
// Counting positions from the right: 1..l-1 carry n, n-1, ..., n-l+2 read
// left to right; l, 2l, ..., (k-1)l carry 1, 2, ..., k-1 read left to right;
// all other positions keep the base's relative order on {k, ..., n-l+1}.
inline Permutation figure1_layout(int k, int l, const Permutation& base) {
  const std::size_t n = base.size();
  if (k < 2 || l < 2) throw DomainError("figure1_layout: k, l must be >= 2");
  if (static_cast<std::size_t>(l) * static_cast<std::size_t>(k - 1) > n)
    throw DomainError("figure1_layout: need n >= l(k-1) = " + std::to_string(l * (k - 1)) + ", got n = " +
                      std::to_string(n));
  std::vector<int> out(n, 0);
  const int top = static_cast<int>(n);
  for (int j = 1; j <= l - 1; ++j) out[n - static_cast<std::size_t>(j)] = top - (l - 1 - j);
  for (int j = 1; j <= k - 1; ++j) out[n - static_cast<std::size_t>(j * l)] = k - j;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (out[i] == 0) rest.push_back(i);
  std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return base[a] < base[b]; });
  for (std::size_t r = 0; r < rest.size(); ++r) out[rest[r]] = k + static_cast<int>(r);
  return make_unchecked(std::move(out));
}

// Verified block construction for 4 <= k <= l, n >= l(k-1). The base must be
// (3,3)-anti-monotone of length n; anti_monotone_33(n) is used if omitted.
// Throws ConstructionInvalid when the result is not (k,l)-crucial (k = 4
// needs a suitable base; the argument for an arbitrary base needs k >= 5).
inline Permutation construct_figure1(int k, int l, std::size_t n, const std::optional<Permutation>& base = {}) {
  if (k < 4 || l < k) throw DomainError("construct_figure1: need 4 <= k <= l, got " + detail::kl(k, l));
  if (n < static_cast<std::size_t>(l) * static_cast<std::size_t>(k - 1))
    throw DomainError("construct_figure1: need n >= l(k-1) = " + std::to_string(l * (k - 1)));
  const Permutation b = base ? *base : anti_monotone_33(n);
  if (b.size() != n)
    throw InvalidInput("construct_figure1: base has length " + std::to_string(b.size()) + ", expected " +
                       std::to_string(n));
  if (!is_anti_monotone(b, 3, 3)) throw ContractError("construct_figure1: base is not (3,3)-anti-monotone");
  return detail::ensure_crucial(figure1_layout(k, l, b), k, l, "figure1");
}

// Figure-1 layout over a deterministic sequence of (3,3)-anti-monotone bases:
// the four symmetries of anti_monotone_33(n), then `attempts` randomized
// shuffle-down bases from a fixed seed. Returns the first verified output.
inline std::optional<Permutation> figure1_with_base_search(int k, int l, std::size_t n, std::size_t attempts = 4000,
                                                           std::uint64_t seed = 0x5eed) {
  if (n < static_cast<std::size_t>(l) * static_cast<std::size_t>(k - 1)) return std::nullopt;
  // For (4,4): the 6th entry from the right must be below the 9th, otherwise
  // the largest and smallest entries close a d = 3 occurrence of 1234.
  auto plausible = [&](const Permutation& b) { return !(k == 4 && l == 4) || b[n - 6] < b[n - 9]; };
  auto attempt = [&](const Permutation& b) -> std::optional<Permutation> {
    if (!plausible(b)) return std::nullopt;
    auto out = figure1_layout(k, l, b);
    if (is_crucial(out, k, l)) return out;
    return std::nullopt;
  };
  const Permutation f = anti_monotone_33(n);
  for (const auto& b : {f, reverse(f), complement(f), reverse_complement(f)})
    if (auto r = attempt(b)) return r;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < attempts; ++i)
    if (auto r = attempt(random_anti_monotone_33(n, rng))) return r;
  return std::nullopt;
}

// Completes a partial layout (0 = free slot) with the unused values in
// lexicographic order, pruning any prefix that is not (k,l)-anti-monotone,
// and returns the lexicographically smallest completion accepted by
// `accept`. Throws NotFound when the node budget runs out first.
inline std::optional<Permutation> complete_layout(const std::vector<int>& layout, int k, int l,
                                                  const std::function<bool(const Permutation&)>& accept,
                                                  std::uint64_t max_nodes = 50'000'000) {
  const std::size_t n = layout.size();
  std::vector<char> used(n + 1, 0);
  for (int v : layout) {
    if (v < 0 || v > static_cast<int>(n)) throw InvalidInput("complete_layout: value out of range");
    if (v != 0) {
      if (used[v]) throw InvalidInput("complete_layout: duplicate fixed value");
      used[v] = 1;
    }
  }
  std::vector<int> free_values;
  for (int v = 1; v <= static_cast<int>(n); ++v)
    if (!used[v]) free_values.push_back(v);
  std::vector<char> taken(n + 1, 0);
  PrefixRuns runs(n, k, l);
  std::uint64_t nodes = 0;
  std::optional<Permutation> found;

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == n) {
      auto p = make_unchecked(runs.values());
      if (accept(p)) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    if (++nodes > max_nodes) throw NotFound("complete_layout: node budget exhausted");
    if (layout[i] != 0) {
      if (!runs.push(layout[i])) return false;
      const bool done = dfs(i + 1);
      runs.pop();
      return done;
    }
    for (int v : free_values) {
      if (taken[v] || !runs.push(v)) continue;
      taken[v] = 1;
      const bool done = dfs(i + 1);
      taken[v] = 0;
      runs.pop();
      if (done) return true;
    }
    return false;
  };
  dfs(0);
  return found;
}

// 185926743(12)(11)(10): block layout with k = l = 4, n = 12.
inline Permutation construct_crucial_44() {
  return detail::ensure_crucial(Permutation{1, 8, 5, 9, 2, 6, 7, 4, 3, 12, 11, 10}, 4, 4, "crucial-44");
}

// Arbitrary length n >= 12: the block layout over a base satisfying the
// (4,4) side condition, found by figure1_with_base_search.
inline Permutation construct_crucial_44(std::size_t n) {
  if (n < 12) throw DomainError("construct_crucial_44: n must be >= 12");
  if (n == 12) return construct_crucial_44();
  if (auto r = figure1_with_base_search(4, 4, n)) return *r;
  throw NotFound("construct_crucial_44: no suitable base found for n = " + std::to_string(n));
}

namespace detail {

// 1 A 2 B 3 (n)(n-1)...(n-l+2) with A, B copies of the block pattern
// (m-1)(m-2)(m)(m-3)...1, m = l-1, shifted to {l+3..2l+1} and {4..l+2}.
inline Permutation template_4l(int l) {
  const int m = l - 1;
  std::vector<int> block{m - 1, m - 2, m};
  for (int v = m - 3; v >= 1; --v) block.push_back(v);
  const int n = 3 * l;
  std::vector<int> out{1};
  for (int v : block) out.push_back(v + l + 2);
  out.push_back(2);
  for (int v : block) out.push_back(v + 3);
  out.push_back(3);
  for (int v = n; v >= n - l + 2; --v) out.push_back(v);
  return Permutation(std::move(out));
}

// 1 (2l-1)(2l-2)(2l)(2l-3)...(l+2) 2 (l+1) l ... 3
inline Permutation template_3l(int l) {
  std::vector<int> out{1, 2 * l - 1, 2 * l - 2, 2 * l};
  for (int v = 2 * l - 3; v >= l + 2; --v) out.push_back(v);
  out.push_back(2);
  for (int v = l + 1; v >= 3; --v) out.push_back(v);
  return Permutation(std::move(out));
}

// Prefix length of the (3,l)-bicrucial template: l-3 when 3 | l, else l-1.
inline int bicrucial_3l_prefix(int l) { return l % 3 == 0 ? l - 3 : l - 1; }

// (N-1) N (N-2) (N-3) ... above a copy of template_3l(l).
inline Permutation template_bicrucial_3l(int l, int prefix) {
  const int n = 2 * l + prefix;
  std::vector<int> out;
  if (prefix >= 2) {
    out = {n - 1, n};
    for (int v = n - 2; v > 2 * l; --v) out.push_back(v);
  } else if (prefix == 1) {
    out = {n};
  }
  for (int v : template_3l(l)) out.push_back(v);
  return Permutation(std::move(out));
}

}  // namespace detail

// Constrained search for a (4,l)-crucial permutation of length 3l: 1, 2, 3 at
// right-positions 3l, 2l, l and the l-1 largest values descending at the end;
// the middle is searched.
inline std::optional<Permutation> search_crucial_4l(int l, std::uint64_t max_nodes = 50'000'000) {
  if (l < 4) throw DomainError("search_crucial_4l: l must be >= 4");
  const int n = 3 * l;
  std::vector<int> layout(static_cast<std::size_t>(n), 0);
  layout[0] = 1;
  layout[static_cast<std::size_t>(l)] = 2;
  layout[static_cast<std::size_t>(2 * l)] = 3;
  for (int j = 1; j <= l - 1; ++j) layout[static_cast<std::size_t>(2 * l + j)] = n + 1 - j;
  return complete_layout(layout, 4, l, [l](const Permutation& p) { return is_crucial(p, 4, l); }, max_nodes);
}

// Constrained search for a (3,l)-crucial permutation of length 2l: 1 first,
// 2 at position l+1, then l+1, l, ..., 3; the block between is searched.
inline std::optional<Permutation> search_crucial_3l(int l, std::uint64_t max_nodes = 50'000'000) {
  if (l < 4) throw DomainError("search_crucial_3l: l must be >= 4");
  const int n = 2 * l;
  std::vector<int> layout(static_cast<std::size_t>(n), 0);
  layout[0] = 1;
  layout[static_cast<std::size_t>(l)] = 2;
  for (int j = 0; j < l - 1; ++j) layout[static_cast<std::size_t>(l + 1 + j)] = l + 1 - j;
  return complete_layout(layout, 3, l, [l](const Permutation& p) { return is_crucial(p, 3, l); }, max_nodes);
}

// Constrained search for a (3,l)-bicrucial permutation: a prefix of the
// largest values (searched, shortest prefix first) above a copy of
// construct_crucial_3l's layout.
inline std::optional<Permutation> search_bicrucial_3l(int l, std::uint64_t max_nodes = 50'000'000) {
  if (l < 4) throw DomainError("search_bicrucial_3l: l must be >= 4");
  const auto suffix = detail::template_3l(l);
  for (int prefix = 1; prefix <= l + 3; ++prefix) {
    std::vector<int> layout(static_cast<std::size_t>(prefix), 0);
    for (int v : suffix) layout.push_back(v);
    if (auto r = complete_layout(layout, 3, l, [l](const Permutation& p) { return is_bicrucial(p, 3, l); },
                                 max_nodes))
      return r;
  }
  return std::nullopt;
}

// (4,l)-crucial permutation of length 3l.
inline Permutation construct_crucial_4l(int l) {
  if (l < 4) throw DomainError("construct_crucial_4l: l must be >= 4");
  const std::string what = "crucial-4l";
  if (l == 4) return detail::ensure_crucial(Permutation{1, 8, 7, 9, 2, 5, 4, 6, 3, 12, 11, 10}, 4, 4, what);
  if (l == 5)
    return detail::ensure_crucial(Permutation{1, 10, 9, 11, 8, 2, 6, 5, 7, 4, 3, 15, 14, 13, 12}, 4, 5, what);
  auto t = detail::template_4l(l);
  if (is_crucial(t, 4, l)) return t;
  if (auto r = search_crucial_4l(l)) return *r;
  throw NotFound(what + ": no (4," + std::to_string(l) + ")-crucial permutation found");
}

// (3,l)-crucial permutation of length 2l with no decreasing arithmetic run
// of length l for d = 1 or d > 2.
inline Permutation construct_crucial_3l(int l) {
  if (l < 3) throw DomainError("construct_crucial_3l: l must be >= 3");
  const std::string what = "crucial-3l";
  if (l == 3) return detail::ensure_crucial(Permutation{2, 1, 6, 4, 5, 3}, 3, 3, what);
  auto t = detail::template_3l(l);
  if (is_crucial(t, 3, l)) return t;
  if (auto r = search_crucial_3l(l)) return *r;
  throw NotFound(what + ": no (3," + std::to_string(l) + ")-crucial permutation found");
}

// (3,l)-bicrucial permutation, l >= 4. Lengths: 3l-3 (l = 0 mod 3),
// 3l-1 otherwise.
inline Permutation construct_bicrucial_3l(int l) {
  if (l < 4) throw DomainError("construct_bicrucial_3l: l must be >= 4");
  const std::string what = "bicrucial-3l";
  switch (l) {
    case 4: return detail::ensure_bicrucial(parse_notation("(10)(11)917682543"), 3, 4, what);
    case 5: return detail::ensure_bicrucial(parse_notation("(13)(14)(12)(11)198(10)726543"), 3, 5, what);
    case 6: return detail::ensure_bicrucial(parse_notation("(14)(15)(13)1(11)(10)(12)98276543"), 3, 6, what);
    default: break;
  }
  auto t = detail::template_bicrucial_3l(l, detail::bicrucial_3l_prefix(l));
  if (is_bicrucial(t, 3, l)) return t;
  if (auto r = search_bicrucial_3l(l)) return *r;
  throw NotFound(what + ": no (3," + std::to_string(l) + ")-bicrucial permutation found");
}

namespace detail {

inline void require_crucial_input(const Permutation& c, int k, int l, const char* what) {
  check_crucial_lengths(k, l);
  if (!is_crucial(c, k, l)) throw ContractError(std::string(what) + ": input is not " + kl(k, l) + "-crucial");
}

inline void require_anti_monotone_filler(const Permutation& t, int k, int l, const char* what) {
  if (!is_anti_monotone(t, k, l))
    throw ContractError(std::string(what) + ": filler is not " + kl(k, l) + "-anti-monotone");
}

}  // namespace detail

// Length 2n+1: filler t (length n+1, all small) at odd positions, c shifted
// above it at even positions. Crucial for the same (k,l) as c.
inline Permutation double_odd(const Permutation& c, const Permutation& t, int k, int l) {
  if (t.size() != c.size() + 1) throw InvalidInput("double_odd: need |t| = |c| + 1");
  detail::require_crucial_input(c, k, l, "double_odd");
  detail::require_anti_monotone_filler(t, k, l, "double_odd");
  return detail::ensure_crucial(detail::interleave(t, c, false), k, l, "double-odd");
}

// Length 2n: c shifted high at odd positions, filler t (length n) at even.
inline Permutation double_even(const Permutation& c, const Permutation& t, int k, int l) {
  if (t.size() != c.size()) throw InvalidInput("double_even: need |t| = |c|");
  detail::require_crucial_input(c, k, l, "double_even");
  detail::require_anti_monotone_filler(t, k, l, "double_even");
  return detail::ensure_crucial(detail::interleave(c, t, true), k, l, "double-even");
}

// Length 2n: w shifted high at odd positions, reverse_complement(w) at even.
// The odd side blocks right extensions, the even side left extensions.
inline Permutation make_bicrucial(const Permutation& w, int k, int l) {
  detail::require_crucial_input(w, k, l, "make_bicrucial");
  return detail::ensure_bicrucial(detail::interleave(w, reverse_complement(w), true), k, l, "make-bicrucial");
}

// Length 2|b|+1: filler t (length |b|+1) at odd positions, b shifted high at
// even positions; both outer slots share parity with b's positions.
inline Permutation extend_bicrucial_odd(const Permutation& b, const Permutation& t, int k, int l) {
  detail::check_crucial_lengths(k, l);
  if (t.size() != b.size() + 1) throw InvalidInput("extend_bicrucial_odd: need |t| = |b| + 1");
  if (!is_bicrucial(b, k, l)) throw ContractError("extend_bicrucial_odd: input is not " + detail::kl(k, l) + "-bicrucial");
  detail::require_anti_monotone_filler(t, k, l, "extend_bicrucial_odd");
  return detail::ensure_bicrucial(detail::interleave(t, b, false), k, l, "extend-bicrucial-odd");
}

namespace detail {

// Lengths reachable from `bases` by n -> 2n and n -> 2n+1, up to `limit`.
inline std::set<std::size_t> doubling_closure(const std::set<std::size_t>& bases, std::size_t limit) {
  std::set<std::size_t> out;
  std::vector<std::size_t> todo(bases.begin(), bases.end());
  while (!todo.empty()) {
    const auto n = todo.back();
    todo.pop_back();
    if (n > limit || !out.insert(n).second) continue;
    todo.push_back(2 * n);
    todo.push_back(2 * n + 1);
  }
  return out;
}

inline std::string nearest_supported(const std::set<std::size_t>& lengths, std::size_t n) {
  std::optional<std::size_t> below, above;
  for (auto m : lengths) {
    if (m < n) below = m;
    if (m > n && !above) above = m;
  }
  std::string s;
  if (below) s += "n = " + std::to_string(*below);
  if (above) s += (s.empty() ? "" : " or ") + std::string("n = ") + std::to_string(*above);
  return s;
}

}  // namespace detail

// (k,l)-crucial permutation of length n. Dispatch:
//   k > l            complement of the (l,k) construction
//   k >= 5           block layout over anti_monotone_33(n)
//   k = 4            3l-template / (4,4) fixture, else block layout with base
//                    search, else doubling of a shorter one
//   k = 3            2l-template, else doubling of a shorter one
inline Permutation construct_crucial(int k, int l, std::size_t n) {
  detail::check_crucial_lengths(k, l);
  const std::size_t m = minimal_length_formula(k, l);
  if (n < m)
    throw DomainError("no " + detail::kl(k, l) + "-crucial permutation of length " + std::to_string(n) +
                      " exists (minimum is " + std::to_string(m) + ")");
  if (k > l) return detail::ensure_crucial(complement(construct_crucial(l, k, n)), k, l, "crucial");
  if (k >= 5) return construct_figure1(k, l, n);
  if (n == m) return k == 4 ? (l == 4 ? construct_crucial_44() : construct_crucial_4l(l)) : construct_crucial_3l(l);
  if (k == 4) {
    if (auto r = figure1_with_base_search(4, l, n, 1000)) return *r;
  }
  const std::size_t half = n / 2;
  const auto supported = detail::doubling_closure({m}, 2 * n + 2);
  if (half >= m && supported.count(half)) {
    const auto c = construct_crucial(k, l, half);
    return n % 2 == 0 ? double_even(c, anti_monotone_33(half), k, l)
                      : double_odd(c, anti_monotone_33(half + 1), k, l);
  }
  throw Unsupported("no construction covers " + detail::kl(k, l) + ", n = " + std::to_string(n) + "; nearest " +
                    (k == 3 ? "(3,l) family" : "(4,l) family") + " lengths: " +
                    detail::nearest_supported(supported, n) + " (try `search exists-crucial`)");
}

}  // namespace apcrucial
