#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "apcrucial/errors.hpp"
#include "apcrucial/notation.hpp"
#include "apcrucial/search.hpp"
#include "json.hpp"

namespace apcrucial {

// One JSON object per SearchRecord:
//   {"k":3,"l":3,"n":8,"kind":"crucial","exists":true,"count":40,
//    "witness":"21836547","elapsed":0.0012,"nodes":5121,
//    "engine_version":"apcrucial-search/1"}
// `count` and `witness` are null when absent.
inline nlohmann::json to_json(const SearchRecord& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["l"] = r.l;
  j["n"] = r.n;
  j["kind"] = to_string(r.kind);
  j["exists"] = r.exists;
  j["count"] = r.count ? nlohmann::json(*r.count) : nlohmann::json(nullptr);
  j["witness"] = r.witness ? nlohmann::json(format_notation(*r.witness)) : nlohmann::json(nullptr);
  j["elapsed"] = r.elapsed;
  j["nodes"] = r.nodes;
  j["engine_version"] = kEngineVersion;
  return j;
}

inline SearchRecord record_from_json(const nlohmann::json& j) {
  SearchRecord r;
  r.k = j.at("k").get<int>();
  r.l = j.at("l").get<int>();
  r.n = j.at("n").get<std::size_t>();
  r.kind = parse_search_kind(j.at("kind").get<std::string>());
  r.exists = j.at("exists").get<bool>();
  if (!j.at("count").is_null()) r.count = j.at("count").get<std::uint64_t>();
  if (!j.at("witness").is_null()) r.witness = parse_notation(j.at("witness").get<std::string>());
  r.elapsed = j.at("elapsed").get<double>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.complete = true;
  return r;
}

// Append-only JSONL store of complete search results. Lines written by a
// different engine version are ignored on lookup.
class ResultCache {
 public:
  static constexpr const char* kEnvVar = "APCRUCIAL_CACHE";
  static constexpr const char* kDefaultPath = "apcrucial-cache.jsonl";

  explicit ResultCache(std::string path) : path_(std::move(path)) { load(); }

  // Flag value if given, else $APCRUCIAL_CACHE, else the default file name.
  static std::string resolve_path(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv(kEnvVar); env && *env) return env;
    return kDefaultPath;
  }

  const std::string& path() const noexcept { return path_; }
  const std::vector<SearchRecord>& records() const noexcept { return records_; }

  // A cached record answers an existence query always and a count query
  // only if it was counted. Later lines win.
  std::optional<SearchRecord> lookup(int k, int l, std::size_t n, SearchKind kind, bool need_count) const {
    for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
      if (it->k == k && it->l == l && it->n == n && it->kind == kind && (!need_count || it->count)) return *it;
    }
    return std::nullopt;
  }

  void append(const SearchRecord& r) {
    if (!r.complete) throw ContractError("refusing to cache an incomplete search result");
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open cache file '" + path_ + "' for appending");
    out << to_json(r).dump() << '\n';
    records_.push_back(r);
  }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) continue;
      if (j.value("engine_version", std::string{}) != kEngineVersion) continue;
      try {
        records_.push_back(record_from_json(j));
      } catch (const std::exception&) {
        // malformed line; skip
      }
    }
  }

  std::string path_;
  std::vector<SearchRecord> records_;
};

// Existence (or count) search served from `cache` when possible; fresh
// complete results are appended to it.
inline SearchRecord cached_search(int k, int l, std::size_t n, SearchKind kind, bool count,
                                  const SearchBudget& budget, ResultCache* cache, bool force) {
  if (cache && !force) {
    if (auto hit = cache->lookup(k, l, n, kind, count)) return *hit;
  }
  auto rec = count ? count_of_kind(k, l, n, kind, budget) : exists_of_kind(k, l, n, kind, budget);
  if (cache && rec.complete) cache->append(rec);
  return rec;
}

// One record per n = 1..n_max. Stops early only if a search runs out of
// budget (the incomplete record is the last entry).
inline std::vector<SearchRecord> classify_lengths(int k, int l, std::size_t n_max, SearchKind kind,
                                                  const SearchBudget& budget = {}, ResultCache* cache = nullptr,
                                                  bool force = false, bool count = false) {
  std::vector<SearchRecord> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    out.push_back(cached_search(k, l, n, kind, count, budget, cache, force));
    if (!out.back().complete) break;
  }
  return out;
}

}  // namespace apcrucial
