#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apcrucial/errors.hpp"
#include "apcrucial/permutation.hpp"

namespace apcrucial {

enum class Direction { up, down };

inline const char* to_string(Direction d) { return d == Direction::up ? "up" : "down"; }

// Arithmetic progression of positions start, start+d, ..., start+(length-1)d
// (1-based) whose values are strictly monotone in `direction`.
struct Occurrence {
  std::size_t start = 1;
  std::size_t difference = 1;
  std::size_t length = 1;
  Direction direction = Direction::up;

  std::size_t last() const noexcept { return start + (length - 1) * difference; }

  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> out(length);
    for (std::size_t j = 0; j < length; ++j) out[j] = start + j * difference;
    return out;
  }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

inline std::string describe(const Occurrence& o, const Permutation& p) {
  std::string s = std::string(to_string(o.direction)) + " d=" + std::to_string(o.difference) + " positions";
  std::string vals = " values";
  for (auto pos : o.positions()) {
    s += ' ' + std::to_string(pos);
    vals += ' ' + std::to_string(p[pos - 1]);
  }
  return s + vals;
}

namespace detail {
inline void check_pattern_lengths(int k, int l) {
  if (k < 2 || l < 2)
    throw DomainError("pattern lengths must be >= 2 (got k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
}
}  // namespace detail

// Longest monotone arithmetic runs ending at each position, for every
// difference:
//   up(i, d)   = 1 + up(i-d, d)   if i-d >= 1 and p[i-d] < p[i], else 1
//   down(i, d) = 1 + down(i-d, d) if i-d >= 1 and p[i-d] > p[i], else 1
// Positions and differences are 1-based; d ranges over 1..n-1.
class RunTable {
 public:
  explicit RunTable(const Permutation& p) : perm_(p), n_(p.size()), stride_(p.size()) {
    up_.assign(n_ * stride_, 1);
    down_.assign(n_ * stride_, 1);
    for (std::size_t d = 1; d < n_; ++d) {
      for (std::size_t i = d; i < n_; ++i) {
        const int prev = p[i - d];
        const int cur = p[i];
        if (prev < cur) {
          up_[idx(i, d)] = static_cast<Run>(up_[idx(i - d, d)] + 1);
        } else {
          down_[idx(i, d)] = static_cast<Run>(down_[idx(i - d, d)] + 1);
        }
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  const Permutation& permutation() const noexcept { return perm_; }

  // 1-based position i in 1..n, difference d in 1..n-1 (any d >= n yields 1).
  std::size_t up(std::size_t i, std::size_t d) const noexcept { return d >= n_ ? 1 : up_[idx(i - 1, d)]; }
  std::size_t down(std::size_t i, std::size_t d) const noexcept { return d >= n_ ? 1 : down_[idx(i - 1, d)]; }
  std::size_t run(Direction dir, std::size_t i, std::size_t d) const noexcept {
    return dir == Direction::up ? up(i, d) : down(i, d);
  }

  std::size_t max_up() const noexcept { return n_ == 1 ? 1 : *std::max_element(up_.begin(), up_.end()); }
  std::size_t max_down() const noexcept { return n_ == 1 ? 1 : *std::max_element(down_.begin(), down_.end()); }

  // Run lengths a value x (in 1..n+1, extension semantics) appended at
  // position n+1 would end with difference d. Existing values < x stay below
  // it and values >= x are bumped above it, so stored runs are reused as-is.
  std::size_t extension_up(int x, std::size_t d) const noexcept {
    if (d > n_) return 1;
    const std::size_t j = n_ + 1 - d;
    return perm_[j - 1] < x ? up(j, d) + 1 : 1;
  }
  std::size_t extension_down(int x, std::size_t d) const noexcept {
    if (d > n_) return 1;
    const std::size_t j = n_ + 1 - d;
    return perm_[j - 1] >= x ? down(j, d) + 1 : 1;
  }

 private:
  using Run = std::uint16_t;
  std::size_t idx(std::size_t i0, std::size_t d) const noexcept { return i0 * stride_ + d; }

  Permutation perm_;
  std::size_t n_;
  std::size_t stride_;
  std::vector<Run> up_;
  std::vector<Run> down_;
};

inline RunTable build_run_table(const Permutation& p) { return RunTable(p); }

// Every arithmetic occurrence of the monotone pattern of length m in the
// given direction, ordered by (difference, start). For m = 1 each position
// is reported once with difference 1.
inline std::vector<Occurrence> arithmetic_occurrences(const RunTable& table, Direction dir, std::size_t m) {
  if (m == 0) throw DomainError("occurrence length must be >= 1");
  const std::size_t n = table.size();
  std::vector<Occurrence> out;
  if (m == 1) {
    for (std::size_t i = 1; i <= n; ++i) out.push_back({i, 1, 1, dir});
    return out;
  }
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t last = 1 + (m - 1) * d; last <= n; ++last) {
      if (table.run(dir, last, d) >= m) out.push_back({last - (m - 1) * d, d, m, dir});
    }
  }
  return out;
}

inline std::vector<Occurrence> arithmetic_occurrences(const Permutation& p, Direction dir, std::size_t m) {
  return arithmetic_occurrences(RunTable(p), dir, m);
}

// First arithmetic occurrence of 12...k or l...21 (scanning differences in
// increasing order, then end positions), or nullopt if p is anti-monotone.
// Uses O(n) scratch and stops at the first hit; suitable for large n.
inline std::optional<Occurrence> find_monotone_occurrence(const Permutation& p, int k, int l) {
  detail::check_pattern_lengths(k, l);
  const std::size_t n = p.size();
  const auto ku = static_cast<std::size_t>(k);
  const auto ld = static_cast<std::size_t>(l);
  const std::size_t shortest = std::min(ku, ld);
  if (n < shortest) return std::nullopt;
  std::vector<std::uint32_t> up(n), down(n);
  const std::size_t max_d = (n - 1) / (shortest - 1);
  for (std::size_t d = 1; d <= max_d; ++d) {
    for (std::size_t i = 0; i < d; ++i) up[i] = down[i] = 1;
    for (std::size_t i = d; i < n; ++i) {
      if (p[i - d] < p[i]) {
        up[i] = up[i - d] + 1;
        down[i] = 1;
        if (up[i] >= ku) return Occurrence{i + 1 - (ku - 1) * d, d, ku, Direction::up};
      } else {
        down[i] = down[i - d] + 1;
        up[i] = 1;
        if (down[i] >= ld) return Occurrence{i + 1 - (ld - 1) * d, d, ld, Direction::down};
      }
    }
  }
  return std::nullopt;
}

// True iff p avoids arithmetically both 12...k and l(l-1)...1.
inline bool is_anti_monotone(const Permutation& p, int k, int l) {
  return !find_monotone_occurrence(p, k, l).has_value();
}

inline bool is_anti_monotone(const RunTable& t, int k, int l) {
  detail::check_pattern_lengths(k, l);
  return t.max_up() < static_cast<std::size_t>(k) && t.max_down() < static_cast<std::size_t>(l);
}

// Incrementally maintained runs for a growing prefix of absolute values,
// used by the backtracking searches. push() rejects (and leaves the prefix
// unchanged) any value that would end a run of length >= k up or >= l down;
// runs never shrink when the prefix grows, so rejection is a sound prune.
class PrefixRuns {
 public:
  PrefixRuns(std::size_t capacity, int k, int l)
      : cap_(capacity), k_(static_cast<std::uint16_t>(k)), l_(static_cast<std::uint16_t>(l)) {
    detail::check_pattern_lengths(k, l);
    vals_.reserve(cap_);
    up_.assign(cap_ * (cap_ + 1), 1);
    down_.assign(cap_ * (cap_ + 1), 1);
  }

  std::size_t size() const noexcept { return vals_.size(); }
  const std::vector<int>& values() const noexcept { return vals_; }

  bool push(int v) {
    const std::size_t i = vals_.size();
    std::uint16_t* up = &up_[i * (cap_ + 1)];
    std::uint16_t* down = &down_[i * (cap_ + 1)];
    for (std::size_t d = 1; d <= i; ++d) {
      const int prev = vals_[i - d];
      if (prev < v) {
        const auto r = static_cast<std::uint16_t>(up_[(i - d) * (cap_ + 1) + d] + 1);
        if (r >= k_) return false;
        up[d] = r;
        down[d] = 1;
      } else {
        const auto r = static_cast<std::uint16_t>(down_[(i - d) * (cap_ + 1) + d] + 1);
        if (r >= l_) return false;
        down[d] = r;
        up[d] = 1;
      }
    }
    vals_.push_back(v);
    return true;
  }

  void pop() noexcept { vals_.pop_back(); }

  // Run lengths ending at 0-based position i with difference d (d <= i).
  std::size_t up(std::size_t i, std::size_t d) const noexcept { return d > i ? 1 : up_[i * (cap_ + 1) + d]; }
  std::size_t down(std::size_t i, std::size_t d) const noexcept { return d > i ? 1 : down_[i * (cap_ + 1) + d]; }

 private:
  std::size_t cap_;
  std::uint16_t k_;
  std::uint16_t l_;
  std::vector<int> vals_;
  std::vector<std::uint16_t> up_;
  std::vector<std::uint16_t> down_;
};

}  // namespace apcrucial
