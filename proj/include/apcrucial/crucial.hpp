#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "apcrucial/errors.hpp"
#include "apcrucial/pattern.hpp"
#include "apcrucial/permutation.hpp"

namespace apcrucial {

// A monotone arithmetic chain anchored so that continuing it by one more
// step of `difference` lands on position n+1 (the slot a right extension
// fills). Positions are 1-based.
struct SuffixChain {
  std::size_t difference = 1;
  std::vector<std::size_t> positions;
  int last_value = 0;

  friend bool operator==(const SuffixChain&, const SuffixChain&) = default;
};

// M holds the increasing chains of length k-1, N the decreasing chains of
// length l-1; a_star is the smallest last value over M and b_star the
// largest over N. Every right extension by x is blocked iff x > a_star
// (completes 12...k) or x <= b_star (completes l...21).
struct WitnessSets {
  std::vector<SuffixChain> up_chains;
  std::vector<SuffixChain> down_chains;
  std::optional<int> a_star;
  std::optional<int> b_star;
};

namespace detail {

inline void check_crucial_lengths(int k, int l) {
  if (k < 3 || l < 3)
    throw DomainError("cruciality needs k, l >= 3 (got k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
}

// Scans chains of `len` elements ending at n+1-d for every d; calls
// on_chain(d, last_value) for each one that is monotone in `dir`.
template <typename OnChain>
void scan_suffix_chains(std::span<const int> p, Direction dir, std::size_t len, OnChain&& on_chain) {
  const std::size_t n = p.size();
  if (len == 0) return;
  for (std::size_t d = 1; (len * d) <= n; ++d) {
    // chain positions (0-based): n - len*d, ..., n - d
    std::size_t pos = n - d;
    bool ok = true;
    for (std::size_t j = 1; j < len; ++j) {
      const int later = p[pos];
      const int earlier = p[pos - d];
      if (dir == Direction::up ? !(earlier < later) : !(earlier > later)) {
        ok = false;
        break;
      }
      pos -= d;
    }
    if (ok) on_chain(d, p[n - d]);
  }
}

struct Thresholds {
  std::optional<int> a_star;
  std::optional<int> b_star;
};

inline Thresholds suffix_thresholds(std::span<const int> p, int k, int l) {
  Thresholds t;
  scan_suffix_chains(p, Direction::up, static_cast<std::size_t>(k - 1), [&](std::size_t, int v) {
    if (!t.a_star || v < *t.a_star) t.a_star = v;
  });
  scan_suffix_chains(p, Direction::down, static_cast<std::size_t>(l - 1), [&](std::size_t, int v) {
    if (!t.b_star || v > *t.b_star) t.b_star = v;
  });
  return t;
}

inline bool blocks_every_extension(const Thresholds& t) {
  return t.a_star && t.b_star && *t.a_star <= *t.b_star;
}

}  // namespace detail

inline WitnessSets witness_sets(const Permutation& p, int k, int l) {
  detail::check_crucial_lengths(k, l);
  if (!is_anti_monotone(p, k, l)) throw ContractError("witness_sets: permutation is not anti-monotone");
  WitnessSets w;
  const std::size_t n = p.size();
  auto collect = [&](Direction dir, std::size_t len, std::vector<SuffixChain>& into) {
    detail::scan_suffix_chains(p.values(), dir, len, [&](std::size_t d, int last) {
      SuffixChain c{d, {}, last};
      for (std::size_t j = len; j >= 1; --j) c.positions.push_back(n + 1 - j * d);
      into.push_back(std::move(c));
    });
  };
  collect(Direction::up, static_cast<std::size_t>(k - 1), w.up_chains);
  collect(Direction::down, static_cast<std::size_t>(l - 1), w.down_chains);
  for (const auto& c : w.up_chains)
    if (!w.a_star || c.last_value < *w.a_star) w.a_star = c.last_value;
  for (const auto& c : w.down_chains)
    if (!w.b_star || c.last_value > *w.b_star) w.b_star = c.last_value;
  return w;
}

// Right-extension values x in 1..n+1 whose extension stays anti-monotone.
// Reuses the parent's run table: only runs ending at the new position change.
inline std::vector<int> surviving_right_extensions(const RunTable& t, int k, int l) {
  detail::check_pattern_lengths(k, l);
  const std::size_t n = t.size();
  std::vector<int> out;
  for (int x = 1; x <= static_cast<int>(n) + 1; ++x) {
    bool blocked = false;
    for (std::size_t d = 1; d <= n && !blocked; ++d) {
      blocked = t.extension_up(x, d) >= static_cast<std::size_t>(k) ||
                t.extension_down(x, d) >= static_cast<std::size_t>(l);
    }
    if (!blocked) out.push_back(x);
  }
  return out;
}

// Anti-monotone, and every one of the n+1 right extensions contains a
// prohibited arithmetic occurrence. O(n^2) via the parent run table.
inline bool is_crucial_naive(const Permutation& p, int k, int l) {
  detail::check_crucial_lengths(k, l);
  const RunTable t(p);
  return is_anti_monotone(t, k, l) && surviving_right_extensions(t, k, l).empty();
}

// Threshold test: anti-monotone, M and N nonempty, and a* <= b*.
inline bool is_crucial_fast(const Permutation& p, int k, int l) {
  detail::check_crucial_lengths(k, l);
  if (!is_anti_monotone(p, k, l)) return false;
  return detail::blocks_every_extension(detail::suffix_thresholds(p.values(), k, l));
}

inline bool is_crucial(const Permutation& p, int k, int l) { return is_crucial_fast(p, k, l); }

// No left extension is anti-monotone. Reversal maps left extensions to right
// extensions and swaps the roles of 12...k and l...21.
inline bool is_left_crucial(const Permutation& p, int k, int l) { return is_crucial_fast(reverse(p), l, k); }

inline bool is_bicrucial(const Permutation& p, int k, int l) {
  return is_crucial_fast(p, k, l) && is_left_crucial(p, k, l);
}

enum class VerdictKind { none, anti_monotone, crucial, bicrucial };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::none: return "none";
    case VerdictKind::anti_monotone: return "anti-monotone";
    case VerdictKind::crucial: return "crucial";
    case VerdictKind::bicrucial: return "bicrucial";
  }
  return "?";
}

// Strongest property that holds, with the evidence behind it.
struct Verdict {
  VerdictKind kind = VerdictKind::none;
  int k = 3;
  int l = 3;
  std::optional<Occurrence> violation;       // kind == none
  std::vector<int> surviving_right;          // right extensions that stay anti-monotone
  std::vector<int> surviving_left;           // left extensions that stay anti-monotone
  std::optional<WitnessSets> witnesses;      // any anti-monotone kind
  bool left_crucial = false;
};

inline Verdict classify(const Permutation& p, int k, int l) {
  detail::check_crucial_lengths(k, l);
  Verdict v;
  v.k = k;
  v.l = l;
  if (auto occ = find_monotone_occurrence(p, k, l)) {
    v.violation = *occ;
    return v;
  }
  v.witnesses = witness_sets(p, k, l);
  v.surviving_right = surviving_right_extensions(RunTable(p), k, l);
  // Left extension by x reversed is the right extension of r(p) by x with
  // (l, k) swapped.
  v.surviving_left = surviving_right_extensions(RunTable(reverse(p)), l, k);
  v.left_crucial = v.surviving_left.empty();
  if (!v.surviving_right.empty()) {
    v.kind = VerdictKind::anti_monotone;
  } else {
    v.kind = v.left_crucial ? VerdictKind::bicrucial : VerdictKind::crucial;
  }
  return v;
}

}  // namespace apcrucial
