#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apcrucial/errors.hpp"

namespace apcrucial {

// A permutation of {1, ..., n}, n >= 1, stored in one-line notation.
// Immutable once constructed; all operations return new values.
class Permutation {
 public:
  // Validates that `values` is a bijection onto {1, ..., n}.
  explicit Permutation(std::vector<int> values) : elems_(std::move(values)) {
    if (elems_.empty()) throw InvalidInput("permutation must have length >= 1");
    std::vector<char> seen(elems_.size() + 1, 0);
    const int n = static_cast<int>(elems_.size());
    for (int v : elems_) {
      if (v < 1 || v > n)
        throw InvalidInput("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[v]) throw InvalidInput("duplicate value " + std::to_string(v));
      seen[v] = 1;
    }
  }

  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  std::size_t size() const noexcept { return elems_.size(); }
  int operator[](std::size_t i) const noexcept { return elems_[i]; }
  std::span<const int> values() const noexcept { return elems_; }
  const std::vector<int>& vec() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> values) : elems_(std::move(values)) {}

  friend Permutation make_unchecked(std::vector<int> values);

  std::vector<int> elems_;
};

// Internal fast path for callers that construct bijections by design.
inline Permutation make_unchecked(std::vector<int> values) {
  return Permutation(Permutation::Unchecked{}, std::move(values));
}

// Order-isomorphic permutation on 1..m: the i-th smallest entry becomes i.
template <typename Int>
Permutation reduce(std::span<const Int> seq) {
  if (seq.empty()) throw InvalidInput("cannot reduce an empty sequence");
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[order[r]] == seq[order[r - 1]])
      throw InvalidInput("reduce: duplicate entry " + std::to_string(seq[order[r]]));
    out[order[r]] = static_cast<int>(r + 1);
  }
  return make_unchecked(std::move(out));
}

inline Permutation reduce(const std::vector<int>& seq) { return reduce(std::span<const int>(seq)); }

inline Permutation reverse(const Permutation& p) {
  std::vector<int> out(p.vec().rbegin(), p.vec().rend());
  return make_unchecked(std::move(out));
}

inline Permutation complement(const Permutation& p) {
  const int n1 = static_cast<int>(p.size()) + 1;
  std::vector<int> out(p.size());
  std::transform(p.begin(), p.end(), out.begin(), [n1](int v) { return n1 - v; });
  return make_unchecked(std::move(out));
}

inline Permutation reverse_complement(const Permutation& p) { return complement(reverse(p)); }

namespace detail {

inline void check_insertion_value(const Permutation& p, int x) {
  if (x < 1 || x > static_cast<int>(p.size()) + 1)
    throw InvalidInput("extension value " + std::to_string(x) + " outside 1.." +
                       std::to_string(p.size() + 1));
}

inline std::vector<int> bumped(const Permutation& p, int x) {
  std::vector<int> out;
  out.reserve(p.size() + 1);
  for (int v : p) out.push_back(v >= x ? v + 1 : v);
  return out;
}

}  // namespace detail

// Appends x, bumping every existing value >= x.
inline Permutation extend_right(const Permutation& p, int x) {
  detail::check_insertion_value(p, x);
  auto out = detail::bumped(p, x);
  out.push_back(x);
  return make_unchecked(std::move(out));
}

// Prepends x, bumping every existing value >= x.
inline Permutation extend_left(const Permutation& p, int x) {
  detail::check_insertion_value(p, x);
  auto out = detail::bumped(p, x);
  out.insert(out.begin(), x);
  return make_unchecked(std::move(out));
}

// All n+1 right extensions, ordered by the appended value x = 1..n+1.
inline std::vector<Permutation> extensions_right(const Permutation& p) {
  std::vector<Permutation> out;
  out.reserve(p.size() + 1);
  for (int x = 1; x <= static_cast<int>(p.size()) + 1; ++x) out.push_back(extend_right(p, x));
  return out;
}

inline std::vector<Permutation> extensions_left(const Permutation& p) {
  std::vector<Permutation> out;
  out.reserve(p.size() + 1);
  for (int x = 1; x <= static_cast<int>(p.size()) + 1; ++x) out.push_back(extend_left(p, x));
  return out;
}

// Entries at the given 0-based positions, reduced.
inline Permutation subpattern(const Permutation& p, std::span<const std::size_t> positions) {
  std::vector<int> sub;
  sub.reserve(positions.size());
  for (auto i : positions) sub.push_back(p[i]);
  return reduce(sub);
}

}  // namespace apcrucial
