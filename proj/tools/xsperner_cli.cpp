// Command-line front end: constructions, bounds, check suites, searches and
// the result cache. Machine-readable output via --format json/jsonl/csv.
//
// Exit codes: 0 = success / all checks passed, 1 = a check failed,
// 2 = usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xsperner/bounds.hpp"
#include "xsperner/constructions.hpp"
#include "xsperner/family.hpp"
#include "xsperner/oracles.hpp"
#include "xsperner/serialize.hpp"
#include "xsperner/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace xsperner;

namespace {

struct Output {
  std::string format = "table";
  std::string cache_dir;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--format", format, "table | json | jsonl | csv")
        ->check(CLI::IsMember({"table", "json", "jsonl", "csv"}));
    cmd->add_option("--cache-dir", cache_dir,
                    "result cache root (default: $XSPERNER_CACHE_DIR)");
  }

  std::string resolved_cache_dir() const {
    if (!cache_dir.empty()) return cache_dir;
    if (const char* env = std::getenv("XSPERNER_CACHE_DIR")) return env;
    return {};
  }
};

// Content-addressed cache: one file per (objective, parameters).
class ResultCache {
 public:
  explicit ResultCache(std::string root) : root_(std::move(root)) {}

  bool enabled() const { return !root_.empty(); }

  std::string key_path(const std::string& key) const {
    const auto h = std::hash<std::string>{}(key);
    std::ostringstream name;
    name << key << "-" << std::hex << h << ".json";
    return (fs::path(root_) / name.str()).string();
  }

  std::optional<json> load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(key_path(key));
    if (!in) return std::nullopt;
    json j;
    in >> j;
    return j;
  }

  void store(const std::string& key, const json& j) const {
    if (!enabled()) return;
    std::error_code ec;
    fs::create_directories(root_, ec);
    std::ofstream out(key_path(key));
    if (!out) {
      std::cerr << "warning: cache write failed for " << key_path(key) << "\n";
      return;
    }
    out << j.dump(2) << "\n";
  }

 private:
  std::string root_;
};

void print_family_line(std::ostream& os, const std::string& label,
                       const Family& f) {
  os << "  " << label << " (" << f.size() << "): ";
  bool first = true;
  f.for_each_member([&](std::uint32_t m) {
    if (!first) os << " ";
    first = false;
    os << "{";
    const auto el = SetWord(m, f.n()).elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      os << (i ? "," : "") << el[i];
    os << "}";
  });
  if (first) os << "(empty)";
  os << "\n";
}

int cmd_construct(const std::string& which, int n, int s, int k,
                  const Output& out) {
  json j;
  std::ostringstream table;
  if (which == "theorem1") {
    const CrossPair p = s > 0 ? theorem1_extremal(n, s) : theorem1_extremal(n);
    j = {{"construction", "theorem1"},
         {"n", n},
         {"s", s > 0 ? s : (n + 1) / 2},
         {"F", family_to_json(p.F)},
         {"G", family_to_json(p.G)},
         {"sum", p.F.size() + p.G.size()}};
    table << "theorem1 extremal pair, n=" << n << ", sum "
          << p.F.size() + p.G.size() << "\n";
    print_family_line(table, "F", p.F);
    print_family_line(table, "G", p.G);
  } else if (which == "theorem2") {
    const CrossPair p = theorem2_extremal(n);
    j = {{"construction", "theorem2"},
         {"n", n},
         {"F", family_to_json(p.F)},
         {"G", family_to_json(p.G)},
         {"product", (BigInt(p.F.size()) * p.G.size()).str()}};
    table << "theorem2 extremal pair, n=" << n << ", product "
          << BigInt(p.F.size()) * p.G.size() << "\n";
    print_family_line(table, "F", p.F);
    print_family_line(table, "G", p.G);
  } else if (which == "ktuple") {
    const KTuple t = ktuple_construction(n, k);
    BigInt prod = 1;
    json fams = json::array();
    for (const auto& f : t.families) {
      prod *= f.size();
      fams.push_back(family_to_json(f));
    }
    j = {{"construction", "ktuple"},
         {"n", n},
         {"k", k},
         {"l", l_of_k(k)},
         {"families", fams},
         {"product", prod.str()}};
    table << "ktuple construction, n=" << n << ", k=" << k << ", product "
          << prod << "\n";
    for (int i = 0; i < t.k; ++i)
      print_family_line(table, "F" + std::to_string(i + 1),
                        t.families[static_cast<std::size_t>(i)]);
  } else if (which == "middle-layer") {
    const Family f = sperner_middle_layer(n, k);
    j = {{"construction", "middle-layer"},
         {"l", n},
         {"k", k},
         {"family", family_to_json(f)}};
    table << "lex-first middle layer, l=" << n << ", k=" << k << "\n";
    print_family_line(table, "S", f);
  } else {
    std::cerr << "unknown construction '" << which << "'\n";
    return 2;
  }
  if (out.format == "table")
    std::cout << table.str();
  else
    std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_bound(const std::string& name, int n, int k, long long m, int s, int j_,
              double alpha, const Output& out) {
  BoundRecord rec;
  rec.name = name;
  if (name == "neighborhood-size") {
    rec.params = {{"n", n}, {"s", s}};
    rec.value = neighborhood_size(n, s);
  } else if (name == "fn1") {
    rec.params = {{"n", n}};
    rec.value = f_n1(n);
  } else if (name == "sum") {
    rec.params = {{"n", n}};
    rec.value = sum_bound(n);
  } else if (name == "product") {
    rec.params = {{"n", n}};
    rec.value = product_bound(n);
  } else if (name == "ktuple-upper") {
    rec.params = {{"n", n}, {"k", k}};
    rec.value = ktuple_upper(n, k);
  } else if (name == "ktuple-conjectured") {
    rec.params = {{"n", n}, {"k", k}};
    rec.value = ktuple_conjectured(n, k);
  } else if (name == "lovasz") {
    rec.params = {{"m", m}, {"k", k}};
    rec.is_real = true;
    rec.real_value = lovasz_shadow_bound(static_cast<double>(m), k);
    rec.degenerate = (m == 0);
  } else if (name == "w") {
    rec.params = {{"j", j_}, {"k", k}};
    rec.value = w_tail(j_, k);
  } else if (name == "stirling") {
    rec.params = {};
    rec.is_real = true;
    rec.real_value = stirling_ratio(alpha);
  } else {
    std::cerr << "unknown bound '" << name << "'\n";
    return 2;
  }
  if (out.format == "table") {
    std::cout << rec.name << " = ";
    if (rec.is_real)
      std::cout << rec.real_value;
    else
      std::cout << rec.value;
    if (rec.degenerate) std::cout << "  (degenerate)";
    std::cout << "\n";
  } else {
    std::cout << rec.to_json().dump(2) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& suite, int n, int trials, std::uint64_t seed,
              int k, const Output& out) {
  CheckSink sink = nullptr;
  if (out.format == "jsonl")
    sink = [](int i, const CheckResult& r) {
      json j = r.to_json();
      j["index"] = i;
      std::cout << j.dump() << "\n";
    };
  else
    sink = [](int, const CheckResult& r) {
      if (!r.passed) std::cout << "FAIL: " << r.to_json().dump() << "\n";
    };
  const SuiteSummary s = run_suite(suite, n, trials, seed, sink, k);
  if (out.format == "json")
    std::cout << s.to_json().dump(2) << "\n";
  else if (out.format != "jsonl")
    std::cout << s.suite << " n=" << s.n << " seed=" << s.seed << ": "
              << s.passed << "/" << s.trials << " pass\n";
  return s.all_passed() ? 0 : 1;
}

void print_report(const json& j, const Output& out) {
  if (out.format == "table") {
    std::cout << j.value("objective", "?") << " n=" << j.value("n", 0);
    if (j.contains("m")) std::cout << " m=" << j["m"].get<int>();
    if (j.contains("k")) std::cout << " k=" << j["k"].get<int>();
    std::cout << ": value " << j.value("value", std::string{})
              << (j.value("exact", false) ? " (exact" : " (inexact")
              << (j.value("feasible", true) ? ")" : ", infeasible)") << ", "
              << j.value("nodes_explored", std::uint64_t{0}) << " nodes\n";
    if (j.contains("witnesses"))
      for (const auto& w : j["witnesses"])
        print_family_line(std::cout, "witness", family_from_json(w));
    if (j.contains("notes") && !j["notes"].empty())
      std::cout << "  notes: " << j["notes"].dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int cmd_solve(const std::string& objective, int n, int k, int m,
              std::uint64_t budget, int workers, const Output& out) {
  std::ostringstream key;
  key << "solve-" << objective << "_n" << n;
  if (objective == "ktuple") key << "_k" << k;
  if (objective == "fstar") key << "_m" << m;
  key << "_budget" << budget;
  const ResultCache cache(out.resolved_cache_dir());
  if (auto hit = cache.load(key.str())) {
    print_report(*hit, out);
    return 0;
  }
  SearchReport rep;
  if (objective == "sum")
    rep = max_sum(n, budget, workers);
  else if (objective == "product")
    rep = max_product(n, budget, workers);
  else if (objective == "ktuple")
    rep = max_product_ktuple(n, k, budget);
  else if (objective == "fstar")
    rep = f_star(n, m);
  else {
    std::cerr << "unknown objective '" << objective << "'\n";
    return 2;
  }
  const json j = rep.to_json();
  cache.store(key.str(), j);
  print_report(j, out);
  return 0;
}

int cmd_fnm(int n, int m, const Output& out) {
  std::vector<int> ms;
  if (m > 0) {
    ms.push_back(m);
  } else {
    // sweep the exact range
    const int top = n <= 4 ? (1 << n) : (n == 5 ? 3 : 1);
    for (int i = 1; i <= top; ++i) ms.push_back(i);
  }
  const ResultCache cache(out.resolved_cache_dir());
  json rows = json::array();
  for (int mi : ms) {
    std::ostringstream key;
    key << "fnm_n" << n << "_m" << mi;
    json j;
    if (auto hit = cache.load(key.str())) {
      j = *hit;
    } else {
      j = f_nm(n, mi).to_json();
      cache.store(key.str(), j);
    }
    rows.push_back(j);
  }
  if (out.format == "csv") {
    std::cout << "n,m,fnm,exact\n";
    for (const auto& j : rows)
      std::cout << j["n"].get<int>() << "," << j["m"].get<int>() << ","
                << j["fnm"].get<std::string>() << ","
                << (j["exact"].get<bool>() ? 1 : 0) << "\n";
  } else if (out.format == "table") {
    for (const auto& j : rows) {
      std::cout << "F(" << j["n"].get<int>() << "," << j["m"].get<int>()
                << ") = " << j["fnm"].get<std::string>()
                << (j["exact"].get<bool>() ? "" : "  (heuristic)") << "\n";
    }
  } else if (out.format == "jsonl") {
    for (const auto& j : rows) std::cout << j.dump() << "\n";
  } else {
    std::cout << rows.dump(2) << "\n";
  }
  return 0;
}

int cmd_explore_lemma4(int nprime, int k, int trials, std::uint64_t seed,
                       const Output& out) {
  struct Cell {
    int nprime, k, passed = 0, failed = 0;
    std::optional<json> first_failure;
  };
  std::vector<std::pair<int, int>> cells;
  if (nprime > 0 && k > 0) {
    cells.emplace_back(nprime, k);
  } else {
    for (int np = 1; np <= 6; ++np)
      for (int kk = (np + 2) / 3; kk <= np; ++kk) cells.emplace_back(np, kk);
  }
  json rows = json::array();
  for (auto [np, kk] : cells) {
    if (3 * kk < np) {
      std::cerr << "explore-lemma4: hypothesis k >= n'/3 violated\n";
      return 2;
    }
    Cell c{np, kk};
    for (int i = 0; i < trials; ++i) {
      const Family a = random_family(
          np, seed + static_cast<std::uint64_t>(i), FamilyFilter::DownwardClosed);
      const CheckResult r = check_lemma4(a, kk);
      if (r.passed)
        ++c.passed;
      else {
        ++c.failed;
        if (!c.first_failure) c.first_failure = r.to_json();
      }
    }
    json j{{"nprime", np},
           {"k", kk},
           {"trials", trials},
           {"passed", c.passed},
           {"failed", c.failed}};
    if (c.first_failure) j["first_failure"] = *c.first_failure;
    rows.push_back(j);
    if (out.format == "table") {
      std::cout << "lemma4 n'=" << np << " k=" << kk << ": " << c.passed << "/"
                << trials << " pass";
      if (c.first_failure)
        std::cout << "  first failure sides (" << (*c.first_failure)["lhs"].get<std::string>()
                  << ", " << (*c.first_failure)["rhs"].get<std::string>() << ")";
      std::cout << "\n";
    } else if (out.format == "jsonl") {
      std::cout << rows.back().dump() << "\n";
    }
  }
  if (out.format == "json" || out.format == "csv")
    std::cout << rows.dump(2) << "\n";
  return 0;
}

int cmd_report(const Output& out) {
  const std::string root = out.resolved_cache_dir();
  if (root.empty() || !fs::exists(root)) {
    std::cout << "cache empty\n";
    return 0;
  }
  json rows = json::array();
  std::vector<std::string> paths;
  for (const auto& e : fs::directory_iterator(root))
    if (e.path().extension() == ".json") paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    std::ifstream in(p);
    json j;
    in >> j;
    rows.push_back({{"file", fs::path(p).filename().string()}, {"report", j}});
  }
  if (out.format == "table") {
    for (const auto& r : rows)
      std::cout << r["file"].get<std::string>() << "\n";
  } else {
    std::cout << rows.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-Sperner family laboratory"};
  app.require_subcommand(1);

  Output out;
  int n = 4, s = 0, k = 2, jj = 0, workers = 1;
  long long m_ll = 0;
  int m = 0, trials = 1000, nprime = 0, kk = 0;
  double alpha = 2.0 / 9.0;
  std::uint64_t seed = 1, budget = kDefaultBudget;
  std::string which, name, suite, objective;

  auto* c_construct = app.add_subcommand("construct", "emit an extremal construction");
  c_construct->add_option("which", which, "theorem1 | theorem2 | ktuple | middle-layer")
      ->required();
  c_construct->add_option("--n", n, "ground-set size (l for middle-layer)");
  c_construct->add_option("--s", s, "set size for theorem1");
  c_construct->add_option("--k", k, "tuple size");
  out.add_flags(c_construct);

  auto* c_bound = app.add_subcommand("bound", "evaluate a closed-form bound");
  c_bound->add_option("name", name,
                      "neighborhood-size | fn1 | sum | product | ktuple-upper "
                      "| ktuple-conjectured | lovasz | w | stirling")
      ->required();
  c_bound->add_option("--n", n);
  c_bound->add_option("--k", k);
  c_bound->add_option("--m", m_ll, "family size (lovasz)");
  c_bound->add_option("--s", s, "set size");
  c_bound->add_option("--j", jj, "level index (w)");
  c_bound->add_option("--alpha", alpha, "stirling ratio argument");
  out.add_flags(c_bound);

  auto* c_check = app.add_subcommand("check", "run a randomized oracle suite");
  c_check->add_option("suite", suite,
                      "four-functions | partition | marica | lovasz | prop5")
      ->required();
  c_check->add_option("--n", n);
  c_check->add_option("--trials", trials);
  c_check->add_option("--seed", seed);
  c_check->add_option("--k", kk, "uniformity for lovasz (0 = cycle 1..6)");
  out.add_flags(c_check);

  auto* c_solve = app.add_subcommand("solve", "exact / heuristic search");
  c_solve->add_option("objective", objective, "sum | product | ktuple | fstar")
      ->required();
  c_solve->add_option("--n", n);
  c_solve->add_option("--k", k);
  c_solve->add_option("--m", m);
  c_solve->add_option("--budget", budget, "node budget");
  c_solve->add_option("--workers", workers, "worker threads");
  out.add_flags(c_solve);

  auto* c_fnm = app.add_subcommand("fnm", "isoperimetric values F(n,m)");
  c_fnm->add_option("--n", n);
  c_fnm->add_option("--m", m, "single m (default: sweep the exact range)");
  out.add_flags(c_fnm);

  auto* c_lemma4 = app.add_subcommand("explore-lemma4",
                                      "lemma 4 pass rates on random instances");
  c_lemma4->add_option("--nprime", nprime);
  c_lemma4->add_option("--k", kk);
  c_lemma4->add_option("--trials", trials);
  c_lemma4->add_option("--seed", seed);
  out.add_flags(c_lemma4);

  auto* c_report = app.add_subcommand("report", "list cached results");
  out.add_flags(c_report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_construct->parsed()) return cmd_construct(which, n, s, k, out);
    if (c_bound->parsed()) return cmd_bound(name, n, k, m_ll, s, jj, alpha, out);
    if (c_check->parsed()) return cmd_check(suite, n, trials, seed, kk, out);
    if (c_solve->parsed())
      return cmd_solve(objective, n, k, m, budget, workers, out);
    if (c_fnm->parsed()) return cmd_fnm(n, m, out);
    if (c_lemma4->parsed())
      return cmd_explore_lemma4(nprime, kk, trials, seed, out);
    if (c_report->parsed()) return cmd_report(out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
