#pragma once

// Brute-force reference routines used to cross-check the engine. They share
// no code with pattern.hpp / crucial.hpp beyond the Permutation type and the
// extension operations.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "apcrucial/pattern.hpp"
#include "apcrucial/permutation.hpp"

namespace apcrucial::reference {

// Enumerates every (start, d) progression of length m and tests it directly.
inline std::vector<Occurrence> occurrences(const Permutation& p, Direction dir, std::size_t m) {
  const std::size_t n = p.size();
  std::vector<Occurrence> out;
  if (m == 1) {
    for (std::size_t i = 1; i <= n; ++i) out.push_back({i, 1, 1, dir});
    return out;
  }
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t s = 1; s + (m - 1) * d <= n; ++s) {
      bool mono = true;
      for (std::size_t j = 0; j + 1 < m && mono; ++j) {
        const int a = p[s - 1 + j * d];
        const int b = p[s - 1 + (j + 1) * d];
        mono = dir == Direction::up ? a < b : a > b;
      }
      if (mono) out.push_back({s, d, m, dir});
    }
  }
  return out;
}

inline bool is_anti_monotone(const Permutation& p, int k, int l) {
  return occurrences(p, Direction::up, static_cast<std::size_t>(k)).empty() &&
         occurrences(p, Direction::down, static_cast<std::size_t>(l)).empty();
}

inline bool is_crucial(const Permutation& p, int k, int l) {
  if (!reference::is_anti_monotone(p, k, l)) return false;
  for (int x = 1; x <= static_cast<int>(p.size()) + 1; ++x)
    if (reference::is_anti_monotone(extend_right(p, x), k, l)) return false;
  return true;
}

inline bool is_left_crucial(const Permutation& p, int k, int l) {
  if (!reference::is_anti_monotone(p, k, l)) return false;
  for (int x = 1; x <= static_cast<int>(p.size()) + 1; ++x)
    if (reference::is_anti_monotone(extend_left(p, x), k, l)) return false;
  return true;
}

inline bool is_bicrucial(const Permutation& p, int k, int l) {
  return reference::is_crucial(p, k, l) && reference::is_left_crucial(p, k, l);
}

// Differences a for which positions n+1-(len)a, ..., n+1-a are monotone.
inline std::vector<std::size_t> suffix_chain_differences(const Permutation& p, Direction dir, std::size_t len) {
  const std::size_t n = p.size();
  std::vector<std::size_t> out;
  for (std::size_t a = 1; a * len <= n; ++a) {
    std::vector<int> vals;
    for (std::size_t j = len; j >= 1; --j) vals.push_back(p[n - j * a]);
    bool mono = true;
    for (std::size_t j = 0; j + 1 < vals.size(); ++j)
      mono = mono && (dir == Direction::up ? vals[j] < vals[j + 1] : vals[j] > vals[j + 1]);
    if (mono) out.push_back(a);
  }
  return out;
}

// Calls visit(p) for every permutation of length n in lexicographic order.
template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace apcrucial::reference
