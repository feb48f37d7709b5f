#pragma once

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apcrucial/apcrucial.hpp"
#include "json.hpp"

namespace apcrucial::cli {

// Exit codes.
inline constexpr int kOk = 0;        // property holds / search positive / all facts pass
inline constexpr int kNegative = 1;  // property fails / search negative / a fact fails / construction rejected
inline constexpr int kUsage = 2;     // bad flags or unparsable permutation
inline constexpr int kBudget = 3;    // budget exhausted; partial results flagged

struct CliConfig {
  std::string subcommand;
  int k = 3;
  int l = 3;
  std::optional<std::size_t> n;
  std::string perm;
  std::string property = "crucial";
  std::string family;
  std::string from;
  std::string white;
  std::string base;
  std::string mode;
  std::string kind = "crucial";
  std::string target = "paper";
  std::size_t max_n = 9;
  std::optional<std::size_t> start;
  std::string output = "table";
  bool json = false;
  bool json_in = false;
  bool count = false;
  bool unverified = false;
  bool stretch = false;
  std::uint64_t max_nodes = 0;
  double max_time = 0.0;
  unsigned threads = 1;
  std::optional<std::string> cache;
  bool force = false;
  bool no_cache = false;

  bool want_json() const { return json || output == "json"; }
  SearchBudget budget() const {
    SearchBudget b;
    b.max_nodes = max_nodes;
    b.max_time = std::chrono::milliseconds(static_cast<long long>(max_time * 1000.0));
    b.threads = threads;
    return b;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Permutation argument: compact notation, or a JSON array under --json-in.
inline Permutation read_perm(const std::string& text, bool json_in, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  if (json_in) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw UsageError(std::string(flag) + ": expected a JSON array");
    try {
      return Permutation(j.get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
  return parse_notation(text);
}

inline nlohmann::json occurrence_json(const Occurrence& o, const Permutation& p) {
  nlohmann::json j;
  j["direction"] = to_string(o.direction);
  j["difference"] = o.difference;
  j["positions"] = o.positions();
  std::vector<int> vals;
  for (auto pos : o.positions()) vals.push_back(p[pos - 1]);
  j["values"] = vals;
  return j;
}

inline nlohmann::json chains_json(const std::vector<SuffixChain>& cs) {
  auto arr = nlohmann::json::array();
  for (const auto& c : cs) arr.push_back({{"difference", c.difference}, {"positions", c.positions}, {"last_value", c.last_value}});
  return arr;
}

inline nlohmann::json verdict_json(const Permutation& p, const Verdict& v) {
  nlohmann::json j;
  j["perm"] = format_notation(p);
  j["k"] = v.k;
  j["l"] = v.l;
  j["kind"] = to_string(v.kind);
  j["violation"] = v.violation ? occurrence_json(*v.violation, p) : nlohmann::json(nullptr);
  j["surviving_right"] = v.surviving_right;
  j["surviving_left"] = v.surviving_left;
  if (v.witnesses) {
    j["a_star"] = v.witnesses->a_star ? nlohmann::json(*v.witnesses->a_star) : nlohmann::json(nullptr);
    j["b_star"] = v.witnesses->b_star ? nlohmann::json(*v.witnesses->b_star) : nlohmann::json(nullptr);
    j["up_chains"] = chains_json(v.witnesses->up_chains);
    j["down_chains"] = chains_json(v.witnesses->down_chains);
  }
  return j;
}

inline bool property_holds(const Verdict& v, const std::string& property) {
  if (property == "anti") return v.kind != VerdictKind::none;
  if (property == "crucial") return v.kind == VerdictKind::crucial || v.kind == VerdictKind::bicrucial;
  if (property == "left-crucial") return v.kind != VerdictKind::none && v.left_crucial;
  if (property == "bicrucial") return v.kind == VerdictKind::bicrucial;
  throw UsageError("unknown property '" + property + "'");
}

inline std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

inline int cmd_check(const CliConfig& c, std::ostream& out) {
  const auto p = read_perm(c.perm, c.json_in, "--perm");
  const auto v = classify(p, c.k, c.l);
  const bool holds = property_holds(v, c.property);
  if (c.want_json()) {
    auto j = verdict_json(p, v);
    j["property"] = c.property;
    j["holds"] = holds;
    out << j.dump() << '\n';
  } else {
    out << "permutation: " << format_notation(p) << '\n';
    out << "(k,l): (" << c.k << "," << c.l << ")\n";
    out << "verdict: " << to_string(v.kind) << '\n';
    if (v.violation) out << "violation: " << describe(*v.violation, p) << '\n';
    if (v.witnesses) {
      auto opt = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("none"); };
      out << "a*: " << opt(v.witnesses->a_star) << "  b*: " << opt(v.witnesses->b_star) << '\n';
      for (const auto& ch : v.witnesses->up_chains)
        out << "  up chain d=" << ch.difference << " last=" << ch.last_value << '\n';
      for (const auto& ch : v.witnesses->down_chains)
        out << "  down chain d=" << ch.difference << " last=" << ch.last_value << '\n';
      out << "surviving right extensions: {" << join(v.surviving_right) << "}\n";
      out << "surviving left extensions: {" << join(v.surviving_left) << "}\n";
    }
    out << c.property << ": " << (holds ? "holds" : "fails") << '\n';
  }
  return holds ? kOk : kNegative;
}

inline std::size_t need_n(const CliConfig& c) {
  if (!c.n) throw UsageError("--n is required for this family");
  return *c.n;
}

inline Permutation build_construction(const CliConfig& c) {
  const auto& f = c.family;
  auto filler = [&](std::size_t len) {
    return c.white.empty() ? anti_monotone_33(len) : read_perm(c.white, c.json_in, "--white");
  };
  if (f == "figure1") {
    std::optional<Permutation> base;
    if (!c.base.empty()) base = read_perm(c.base, c.json_in, "--base");
    const std::size_t n = c.n ? *c.n : (base ? base->size() : 0);
    if (n == 0) throw UsageError("figure1 needs --n or --base");
    if (c.unverified) return figure1_layout(c.k, c.l, base ? *base : anti_monotone_33(n));
    return construct_figure1(c.k, c.l, n, base);
  }
  if (f == "crucial") return construct_crucial(c.k, c.l, need_n(c));
  if (f == "crucial-44") return c.n ? construct_crucial_44(*c.n) : construct_crucial_44();
  if (f == "crucial-4l") return construct_crucial_4l(c.l);
  if (f == "crucial-3l") return construct_crucial_3l(c.l);
  if (f == "bicrucial-3l") return construct_bicrucial_3l(c.l);
  if (f == "anti-monotone-33") return anti_monotone_33(need_n(c));
  const auto src = read_perm(c.from, c.json_in, "--from");
  if (f == "make-bicrucial") return make_bicrucial(src, c.k, c.l);
  if (f == "double-odd") return double_odd(src, filler(src.size() + 1), c.k, c.l);
  if (f == "double-even") return double_even(src, filler(src.size()), c.k, c.l);
  if (f == "extend-bicrucial-odd") return extend_bicrucial_odd(src, filler(src.size() + 1), c.k, c.l);
  throw UsageError("unknown family '" + f + "'");
}

inline int cmd_construct(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.family == "minimal-length") {
    out << minimal_length_formula(c.k, c.l) << '\n';
    return kOk;
  }
  try {
    const auto p = build_construction(c);
    if (c.want_json()) {
      nlohmann::json j;
      j["family"] = c.family;
      j["k"] = c.k;
      j["l"] = c.l;
      j["n"] = p.size();
      j["permutation"] = format_notation(p);
      j["verified"] = !c.unverified;
      const bool three_plus = c.k >= 3 && c.l >= 3;
      if (three_plus) j["verdict"] = verdict_json(p, classify(p, c.k, c.l));
      out << j.dump() << '\n';
    } else {
      out << format_notation(p) << '\n';
    }
    return kOk;
  } catch (const ConstructionInvalid& e) {
    err << "construction rejected: " << e.what() << '\n';
    err << "rejected candidate: " << format_notation(e.candidate()) << '\n';
    return kNegative;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kNegative;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << '\n';
    return kNegative;
  } catch (const ContractError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kNegative;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kNegative;
  }
}

inline void print_records(const std::vector<SearchRecord>& recs, bool json, std::ostream& out) {
  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : recs) {
      auto j = to_json(r);
      j["complete"] = r.complete;
      arr.push_back(j);
    }
    out << arr.dump() << '\n';
    return;
  }
  out << std::left << std::setw(4) << "k" << std::setw(4) << "l" << std::setw(5) << "n" << std::setw(11) << "kind"
      << std::setw(8) << "exists" << std::setw(12) << "count" << std::setw(12) << "nodes" << std::setw(11)
      << "seconds" << "witness\n";
  for (const auto& r : recs) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.elapsed;
    std::string exists = r.exists ? "yes" : (r.complete ? "no" : "?");
    std::string count = r.count ? std::to_string(*r.count) + (r.complete ? "" : "+") : "-";
    out << std::setw(4) << r.k << std::setw(4) << r.l << std::setw(5) << r.n << std::setw(11) << to_string(r.kind)
        << std::setw(8) << exists << std::setw(12) << count << std::setw(12) << r.nodes << std::setw(11)
        << secs.str() << (r.witness ? format_notation(*r.witness) : "-") << (r.complete ? "" : "  [incomplete]")
        << '\n';
  }
}

inline std::optional<ResultCache> open_cache(const CliConfig& c) {
  if (c.no_cache) return std::nullopt;
  return ResultCache(ResultCache::resolve_path(c.cache));
}

inline int cmd_search(const CliConfig& c, std::ostream& out) {
  const auto budget = c.budget();
  auto cache = open_cache(c);
  ResultCache* cp = cache ? &*cache : nullptr;
  const auto& m = c.mode;
  if (m == "minimal-crucial" || m == "minimal-bicrucial") {
    const auto kind = m == "minimal-crucial" ? SearchKind::crucial : SearchKind::bicrucial;
    const std::size_t lower = minimal_length_formula(c.k, c.l);
    const std::size_t lo = c.start.value_or(lower);
    const std::size_t hi = c.n.value_or(kind == SearchKind::bicrucial ? 2 * lower : std::max(lo, lower));
    std::vector<SearchRecord> recs;
    std::optional<std::size_t> found;
    for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
      recs.push_back(cached_search(c.k, c.l, n, kind, c.count, budget, cp, c.force));
      if (!recs.back().complete) break;
      if (recs.back().exists) {
        found = n;
        break;
      }
    }
    print_records(recs, c.want_json(), out);
    if (!c.want_json()) out << "minimal length: " << (found ? std::to_string(*found) : std::string("not found")) << '\n';
    if (!recs.empty() && !recs.back().complete) return kBudget;
    return found ? kOk : kNegative;
  }
  SearchKind kind;
  bool count = c.count;
  if (m == "exists-crucial") {
    kind = SearchKind::crucial;
  } else if (m == "exists-bicrucial") {
    kind = SearchKind::bicrucial;
  } else if (m == "count-crucial") {
    kind = SearchKind::crucial;
    count = true;
  } else if (m == "count-bicrucial") {
    kind = SearchKind::bicrucial;
    count = true;
  } else if (m == "enumerate-anti" || m == "count-anti") {
    kind = SearchKind::anti;
    count = true;
  } else {
    throw UsageError("unknown search mode '" + m + "'");
  }
  const auto rec = cached_search(c.k, c.l, need_n(c), kind, count, budget, cp, c.force);
  print_records({rec}, c.want_json(), out);
  if (!rec.complete) return kBudget;
  return rec.exists || count ? kOk : kNegative;
}

inline int cmd_classify(const CliConfig& c, std::ostream& out) {
  auto cache = open_cache(c);
  const auto recs = classify_lengths(c.k, c.l, c.max_n, parse_search_kind(c.kind), c.budget(), cache ? &*cache : nullptr,
                                     c.force, c.count);
  print_records(recs, c.want_json(), out);
  return !recs.empty() && !recs.back().complete ? kBudget : kOk;
}

inline int cmd_verify(const CliConfig& c, std::ostream& out) {
  if (c.target != "paper") throw UsageError("verify: unknown target '" + c.target + "' (expected 'paper')");
  FactOptions opts;
  opts.include_stretch = c.stretch;
  opts.budget = c.budget();
  const auto facts = verify_paper_facts(opts);
  bool all_ok = true;
  if (c.want_json()) {
    auto arr = nlohmann::json::array();
    for (const auto& f : facts)
      arr.push_back({{"id", f.id}, {"statement", f.statement}, {"published", f.published}, {"passed", f.passed},
                     {"detail", f.detail}});
    out << arr.dump() << '\n';
  }
  for (const auto& f : facts) {
    if (!f.passed) all_ok = false;
    if (!c.want_json()) {
      out << (f.passed ? "[PASS] " : "[FAIL] ") << (f.published ? "" : "(computed) ") << f.id << ": " << f.statement;
      if (!f.detail.empty()) out << "  -- " << f.detail;
      out << '\n';
    }
  }
  return all_ok ? kOk : kNegative;
}

// Entry point shared by the binary and the tests. args excludes argv[0].
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Crucial and bicrucial permutations for arithmetic monotone patterns", "apcrucial"};
  app.require_subcommand(1);

  auto add_kl = [&](CLI::App* s) {
    s->add_option("--k", c.k, "length of the prohibited increasing pattern");
    s->add_option("--l", c.l, "length of the prohibited decreasing pattern");
  };
  auto add_output = [&](CLI::App* s) {
    s->add_option("--output", c.output, "table or json")->check(CLI::IsMember({"table", "json"}));
    s->add_flag("--json", c.json, "same as --output json");
    s->add_flag("--json-in", c.json_in, "permutation arguments are JSON arrays");
  };
  auto add_budget = [&](CLI::App* s) {
    s->add_option("--max-nodes", c.max_nodes, "node budget per search (0 = unlimited)");
    s->add_option("--max-time", c.max_time, "time budget per search in seconds (0 = unlimited)");
    s->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    s->add_option("--cache", c.cache, "results cache file (default $APCRUCIAL_CACHE or ./apcrucial-cache.jsonl)");
    s->add_flag("--force", c.force, "ignore cached results");
    s->add_flag("--no-cache", c.no_cache, "neither read nor write the cache");
  };

  auto* check = app.add_subcommand("check", "classify a permutation");
  add_kl(check);
  add_output(check);
  check->add_option("--perm", c.perm, "permutation in compact notation")->required();
  check->add_option("--property", c.property, "anti, crucial, left-crucial or bicrucial")
      ->check(CLI::IsMember({"anti", "crucial", "left-crucial", "bicrucial"}));

  auto* construct = app.add_subcommand("construct", "build a verified permutation");
  construct->add_option("family", c.family,
                        "figure1, crucial, crucial-44, crucial-4l, crucial-3l, bicrucial-3l, make-bicrucial, "
                        "double-odd, double-even, extend-bicrucial-odd, anti-monotone-33, minimal-length")
      ->required();
  add_kl(construct);
  add_output(construct);
  construct->add_option("--n", c.n, "target length");
  construct->add_option("--base", c.base, "(3,3)-anti-monotone base for figure1");
  construct->add_option("--from", c.from, "input permutation for derived families");
  construct->add_option("--white", c.white, "filler permutation (default: anti-monotone-33 of the needed length)");
  construct->add_flag("--unverified", c.unverified, "figure1 only: print the raw layout without verification");

  auto* search = app.add_subcommand("search", "exhaustive pruned search");
  search->add_option("mode", c.mode,
                     "minimal-crucial, minimal-bicrucial, exists-crucial, exists-bicrucial, count-crucial, "
                     "count-bicrucial, count-anti")
      ->required();
  add_kl(search);
  add_output(search);
  add_budget(search);
  search->add_option("--n", c.n, "length (exists/count) or upper limit (minimal)");
  search->add_option("--start", c.start, "first length scanned by minimal-* (default: the known lower bound)");
  search->add_flag("--count", c.count, "count all witnesses instead of stopping at the first");

  auto* classify_cmd = app.add_subcommand("classify", "existence table for n = 1..max-n");
  add_kl(classify_cmd);
  add_output(classify_cmd);
  add_budget(classify_cmd);
  classify_cmd->add_option("--max-n", c.max_n, "largest length")->required();
  classify_cmd->add_option("--kind", c.kind, "anti, crucial or bicrucial")
      ->check(CLI::IsMember({"anti", "crucial", "bicrucial"}));
  classify_cmd->add_flag("--count", c.count, "count all witnesses");

  auto* verify = app.add_subcommand("verify", "check the published facts and pinned computations");
  verify->add_option("target", c.target, "fact set to check (only \"paper\")")->required();
  add_output(verify);
  add_budget(verify);
  verify->add_flag("--stretch", c.stretch, "also search for the minimal (4,4)-crucial length");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }
  try {
    if (*check) return cmd_check(c, out);
    if (*construct) return cmd_construct(c, out, err);
    if (*search) return cmd_search(c, out);
    if (*classify_cmd) return cmd_classify(c, out);
    if (*verify) return cmd_verify(c, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  }
  return kUsage;
}

}  // namespace apcrucial::cli
