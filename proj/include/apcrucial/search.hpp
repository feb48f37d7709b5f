#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "apcrucial/constructions.hpp"
#include "apcrucial/crucial.hpp"
#include "apcrucial/errors.hpp"
#include "apcrucial/pattern.hpp"
#include "apcrucial/permutation.hpp"

namespace apcrucial {

inline constexpr const char* kEngineVersion = "apcrucial-search/1";

enum class SearchKind { anti, crucial, bicrucial };

inline const char* to_string(SearchKind k) {
  switch (k) {
    case SearchKind::anti: return "anti";
    case SearchKind::crucial: return "crucial";
    case SearchKind::bicrucial: return "bicrucial";
  }
  return "?";
}

inline SearchKind parse_search_kind(const std::string& s) {
  if (s == "anti" || s == "anti-monotone") return SearchKind::anti;
  if (s == "crucial") return SearchKind::crucial;
  if (s == "bicrucial") return SearchKind::bicrucial;
  throw InvalidInput("unknown kind '" + s + "' (expected anti, crucial or bicrucial)");
}

// Limits for one search call. Zero means unlimited. Running out is reported
// through SearchRecord::complete, never as a negative answer.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds max_time{0};
  unsigned threads = 1;
};

struct SearchRecord {
  int k = 3;
  int l = 3;
  std::size_t n = 0;
  SearchKind kind = SearchKind::crucial;
  bool exists = false;
  std::optional<std::uint64_t> count;   // empty when the search stopped at the first witness
  std::optional<Permutation> witness;   // lexicographically smallest
  double elapsed = 0.0;                 // seconds
  std::uint64_t nodes = 0;              // prefix appends
  bool complete = true;                 // false: budget ran out, exists/count are lower bounds
};

namespace detail {

// Leaf test for the requested kind; anti-monotonicity is already guaranteed
// by the prefix pruning.
inline bool leaf_matches(std::span<const int> p, SearchKind kind, int k, int l, std::vector<int>& scratch) {
  if (kind == SearchKind::anti) return true;
  if (!blocks_every_extension(suffix_thresholds(p, k, l))) return false;
  if (kind == SearchKind::crucial) return true;
  scratch.assign(p.rbegin(), p.rend());
  return blocks_every_extension(suffix_thresholds(scratch, l, k));
}

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;
  std::uint64_t max_nodes = 0;
};

struct TaskResult {
  std::uint64_t count = 0;
  std::optional<std::vector<int>> first;
  std::uint64_t nodes = 0;
  bool complete = false;
};

using LeafVisitor = std::function<void(std::span<const int>)>;

class SubtreeWalker {
 public:
  SubtreeWalker(std::size_t n, int k, int l, SearchKind kind, bool stop_at_first, std::size_t task,
                SharedState& shared, const LeafVisitor* visitor)
      : n_(n), k_(k), l_(l), kind_(kind), stop_at_first_(stop_at_first), task_(task), shared_(shared),
        visitor_(visitor), runs_(n, k, l), used_(n + 1, 0) {}

  TaskResult run(std::span<const int> prefix) {
    TaskResult r;
    for (int v : prefix) {
      if (!runs_.push(v)) {
        r.complete = true;
        return r;
      }
      used_[v] = 1;
      ++local_nodes_;
    }
    aborted_ = false;
    dfs(r);
    flush();
    r.nodes = local_nodes_;
    r.complete = !aborted_;
    return r;
  }

 private:
  // Returns true to unwind the whole subtree.
  bool dfs(TaskResult& r) {
    if (runs_.size() == n_) {
      if (leaf_matches(runs_.values(), kind_, k_, l_, scratch_)) {
        ++r.count;
        if (visitor_) (*visitor_)(runs_.values());
        if (!r.first) r.first = runs_.values();
        if (stop_at_first_) return true;
      }
      return false;
    }
    for (int v = 1; v <= static_cast<int>(n_); ++v) {
      if (used_[v] || !runs_.push(v)) continue;
      used_[v] = 1;
      if ((++local_nodes_ & 0x3ff) == 0 && should_abort()) {
        aborted_ = true;
      }
      const bool stop = aborted_ || dfs(r);
      used_[v] = 0;
      runs_.pop();
      if (stop) return true;
    }
    return false;
  }

  void flush() {
    shared_.nodes.fetch_add(local_nodes_ - flushed_, std::memory_order_relaxed);
    flushed_ = local_nodes_;
  }

  bool should_abort() {
    flush();
    if (stop_at_first_ && shared_.best_task.load(std::memory_order_relaxed) < task_) return true;
    if (shared_.exhausted.load(std::memory_order_relaxed)) return true;
    const bool over_nodes = shared_.max_nodes && shared_.nodes.load(std::memory_order_relaxed) > shared_.max_nodes;
    const bool over_time = shared_.has_deadline && std::chrono::steady_clock::now() > shared_.deadline;
    if (over_nodes || over_time) {
      shared_.exhausted.store(true);
      return true;
    }
    return false;
  }

  std::size_t n_;
  int k_, l_;
  SearchKind kind_;
  bool stop_at_first_;
  std::size_t task_;
  SharedState& shared_;
  const LeafVisitor* visitor_;
  PrefixRuns runs_;
  std::vector<char> used_;
  std::vector<int> scratch_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t flushed_ = 0;
  bool aborted_ = false;
};

// Lexicographic prefixes of length min(n, 2): the unit of parallel work.
inline std::vector<std::vector<int>> split_prefixes(std::size_t n) {
  std::vector<std::vector<int>> out;
  if (n == 1) return {{1}};
  for (int a = 1; a <= static_cast<int>(n); ++a)
    for (int b = 1; b <= static_cast<int>(n); ++b)
      if (a != b) out.push_back({a, b});
  return out;
}

inline SearchRecord run_search(int k, int l, std::size_t n, SearchKind kind, bool stop_at_first,
                               const SearchBudget& budget, const LeafVisitor* visitor) {
  if (n == 0) throw DomainError("search: n must be >= 1");
  if (kind == SearchKind::anti) {
    check_pattern_lengths(k, l);
  } else {
    check_crucial_lengths(k, l);
  }
  const auto t0 = std::chrono::steady_clock::now();
  SharedState shared;
  shared.max_nodes = budget.max_nodes;
  if (budget.max_time.count() > 0) {
    shared.has_deadline = true;
    shared.deadline = t0 + budget.max_time;
  }
  const auto prefixes = split_prefixes(n);
  std::vector<TaskResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::mutex visit_mutex;
  LeafVisitor locked;
  if (visitor) {
    locked = [&](std::span<const int> p) {
      std::lock_guard<std::mutex> lock(visit_mutex);
      (*visitor)(p);
    };
  }
  const LeafVisitor* leaf = visitor ? &locked : nullptr;

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= prefixes.size()) return;
      if (shared.exhausted.load() || (stop_at_first && shared.best_task.load() < t)) continue;
      SubtreeWalker w(n, k, l, kind, stop_at_first, t, shared, leaf);
      results[t] = w.run(prefixes[t]);
      if (stop_at_first && results[t].first) {
        std::size_t cur = shared.best_task.load();
        while (t < cur && !shared.best_task.compare_exchange_weak(cur, t)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1u, budget.threads);
  if (threads == 1 || visitor) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchRecord rec;
  rec.k = k;
  rec.l = l;
  rec.n = n;
  rec.kind = kind;
  std::uint64_t count = 0;
  bool all_complete = true;
  bool prefix_complete = true;  // every task before the current one completed
  bool settled = false;
  for (std::size_t t = 0; t < results.size(); ++t) {
    const auto& r = results[t];
    rec.nodes += r.nodes;
    count += r.count;
    if (!rec.witness && r.first) {
      rec.witness = make_unchecked(*r.first);
      settled = prefix_complete;
    }
    if (!r.complete) {
      all_complete = false;
      prefix_complete = false;
    }
    if (stop_at_first && rec.witness) break;
  }
  rec.exists = rec.witness.has_value();
  if (stop_at_first) {
    rec.complete = rec.exists ? settled : all_complete;
  } else {
    rec.complete = all_complete;
    rec.count = count;
  }
  rec.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace detail

// Visits every (k,l)-anti-monotone permutation of length n in lexicographic
// order. Prefixes are extended left to right and dropped as soon as a run of
// length k up or l down appears. Returns the count (in SearchRecord::count).
inline SearchRecord enumerate_anti_monotone(int k, int l, std::size_t n,
                                            const std::function<void(std::span<const int>)>& visitor = {},
                                            const SearchBudget& budget = {}) {
  return detail::run_search(k, l, n, SearchKind::anti, false, budget, visitor ? &visitor : nullptr);
}

// Existence search, stops at the lexicographically smallest witness.
inline SearchRecord exists_of_kind(int k, int l, std::size_t n, SearchKind kind, const SearchBudget& budget = {}) {
  return detail::run_search(k, l, n, kind, true, budget, nullptr);
}

inline SearchRecord count_of_kind(int k, int l, std::size_t n, SearchKind kind, const SearchBudget& budget = {},
                                  const std::function<void(std::span<const int>)>& visitor = {}) {
  return detail::run_search(k, l, n, kind, false, budget, visitor ? &visitor : nullptr);
}

inline SearchRecord exists_crucial(int k, int l, std::size_t n, const SearchBudget& budget = {}) {
  return exists_of_kind(k, l, n, SearchKind::crucial, budget);
}
inline SearchRecord count_crucial(int k, int l, std::size_t n, const SearchBudget& budget = {}) {
  return count_of_kind(k, l, n, SearchKind::crucial, budget);
}
inline SearchRecord exists_bicrucial(int k, int l, std::size_t n, const SearchBudget& budget = {}) {
  return exists_of_kind(k, l, n, SearchKind::bicrucial, budget);
}
inline SearchRecord count_bicrucial(int k, int l, std::size_t n, const SearchBudget& budget = {}) {
  return count_of_kind(k, l, n, SearchKind::bicrucial, budget);
}

// Ascending scan over n. `records` holds every length examined; the last
// one is the first positive result when `found` is set.
struct MinimalSearch {
  std::vector<SearchRecord> records;
  std::optional<std::size_t> found;
  std::optional<std::size_t> last_settled;  // largest n whose record is complete
  bool complete = true;
};

// Scans n = start, start+1, ..., n_max for the first length with a witness.
// Defaults: start at m(k,l) (no shorter crucial permutation exists); n_max
// at 2 m(k,l) for bicrucial (make_bicrucial reaches it) and m(k,l) for
// crucial.
inline MinimalSearch find_minimal(int k, int l, SearchKind kind, std::optional<std::size_t> start = {},
                                  std::optional<std::size_t> n_max = {}, const SearchBudget& budget = {}) {
  const std::size_t m = minimal_length_formula(k, l);
  const std::size_t lo = start.value_or(m);
  const std::size_t hi = n_max.value_or(kind == SearchKind::bicrucial ? 2 * m : m);
  MinimalSearch out;
  for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
    auto rec = exists_of_kind(k, l, n, kind, budget);
    const bool complete = rec.complete;
    const bool hit = rec.exists;
    out.records.push_back(std::move(rec));
    if (!complete) {
      out.complete = false;
      return out;
    }
    out.last_settled = n;
    if (hit) {
      out.found = n;
      return out;
    }
  }
  return out;
}

inline MinimalSearch find_minimal_crucial(int k, int l, std::optional<std::size_t> start = {},
                                          const SearchBudget& budget = {}) {
  return find_minimal(k, l, SearchKind::crucial, start, std::nullopt, budget);
}

inline MinimalSearch find_minimal_bicrucial(int k, int l, std::optional<std::size_t> start = {},
                                            const SearchBudget& budget = {}) {
  return find_minimal(k, l, SearchKind::bicrucial, start, std::nullopt, budget);
}

}  // namespace apcrucial
