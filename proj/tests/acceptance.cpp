// Acceptance gate: every top-level requirement, one PASS/FAIL line each.
// Usage: acceptance <path-to-cli>; exit 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "xsperner/constructions.hpp"
#include "xsperner/oracles.hpp"
#include "xsperner/serialize.hpp"
#include "xsperner/solver.hpp"

using nlohmann::json;
using namespace xsperner;

namespace {

std::string g_cli;
int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = {}) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// run the CLI, capture stdout, parse as JSON
json run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " --format json";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    out.append(buf.data(), got);
  const int rc = pclose(p);
  if (rc != 0)
    throw std::runtime_error("cli exited " + std::to_string(rc) + ": " + cmd);
  return json::parse(out);
}

std::pair<Family, Family> witness_pair(const json& rep) {
  return {family_from_json(rep["witnesses"][0]),
          family_from_json(rep["witnesses"][1])};
}

json stripped(const SearchReport& r) {
  json j = r.to_json();
  j.erase("wall_time_ms");
  return j;
}

void criterion1_product_exact() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream detail;
  const BigInt expect[] = {1, 4, 16};
  for (int n = 2; n <= 4; ++n) {
    const json rep = run_cli("solve product --n " + std::to_string(n));
    const BigInt value(rep["value"].get<std::string>());
    if (value != expect[n - 2] || !rep["exact"].get<bool>()) ok = false;
    const auto [wf, wg] = witness_pair(rep);
    const CrossPair t2 = theorem2_extremal(n);
    if (canonical_pair(wf, wg) != canonical_pair(t2.F, t2.G)) ok = false;
    detail << "n=" << n << ":" << value << " ";
  }
  const double secs = seconds_since(t0);
  if (secs >= 60.0) ok = false;
  detail << "(" << secs << "s)";
  report("product exact n=2..4, witness in extremal orbit", ok, detail.str());
}

void criterion2_fn1_formula() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 2; n <= 20; ++n) {
    const auto r = f_nm(n, 1);
    const BigInt formula = (BigInt(1) << n) - (BigInt(1) << ((n + 1) / 2)) -
                           (BigInt(1) << (n / 2)) + 1;
    if (!r.exact || r.fnm != formula) ok = false;
  }
  const double secs = seconds_since(t0);
  if (secs >= 10.0) ok = false;
  report("F(n,1) closed form for n in [2,20]", ok,
         std::to_string(secs) + "s");
}

void criterion3_corollary() {
  const auto r32 = f_nm(3, 2);
  const auto r44 = f_nm(4, 4);
  report("F(3,2)=2 and F(4,4)=4 exactly",
         r32.exact && r32.fnm == 2 && r44.exact && r44.fnm == 4,
         "F(3,2)=" + r32.fnm.str() + " F(4,4)=" + r44.fnm.str());
}

void criterion4_sum_small_n() {
  bool ok = true;
  std::ostringstream detail;
  for (int n = 2; n <= 4; ++n) {
    const json rep = run_cli("solve sum --n " + std::to_string(n));
    const BigInt value(rep["value"].get<std::string>());
    if (!rep["exact"].get<bool>()) ok = false;
    const CrossPair c1 = theorem1_extremal(n);
    if (value < BigInt(c1.F.size()) + c1.G.size()) ok = false;
    if (!rep["notes"].contains("equals_sum_bound")) ok = false;
    if (n <= 3 && value != brute::max_sum(n)) ok = false;
    if (n == 2 && value != 2) ok = false;
    if (n == 3 && value != 4) ok = false;
    detail << "n=" << n << ":" << value << " ";
  }
  report("sum exact n=2..4, n=2,3 equal brute force", ok, detail.str());
}

void criterion5_suites() {
  struct Row {
    const char* suite;
    int n;
    int trials;
    int k;
  };
  const Row rows[] = {{"four-functions", 6, 10000, 0},
                      {"partition", 6, 10000, 0},
                      {"marica", 8, 10000, 0}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& row : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = run_suite(row.suite, row.n, row.trials, 20240601);
    const double secs = seconds_since(t0);
    if (s.failed != 0 || s.passed != row.trials || secs >= 120.0) ok = false;
    detail << row.suite << ":" << s.passed << "/" << s.trials << " ";
  }
  {
    const auto t0 = std::chrono::steady_clock::now();
    int passed = 0;
    for (int k = 1; k <= 6; ++k) {
      const auto s = run_suite("lovasz", 12, 1000, 20240601, nullptr, k);
      passed += s.passed;
      if (s.failed != 0) ok = false;
    }
    const double secs = seconds_since(t0);
    if (secs >= 120.0) ok = false;
    detail << "lovasz:" << passed << "/6000";
  }
  report("oracle suites all pass at their stated sizes", ok, detail.str());
}

void criterion6_lemma4_boundary() {
  const auto r = check_lemma4(Family::from_sets(1, {{}, {1}}), 1);
  const bool sides_ok = !r.passed && r.lhs == "2" && r.rhs == "1";
  const double rho = stirling_ratio(2.0 / 9.0);
  report("violating instance at (n'=1,k=1) has sides (2,1); rho(2/9)>2",
         sides_ok && rho > 2.0,
         "sides=(" + r.lhs + "," + r.rhs + ") rho=" + std::to_string(rho));
}

void criterion7_ktuple_sandwich() {
  bool ok = true;
  std::ostringstream detail;
  for (int n = 2; n <= 3; ++n) {
    for (int k = 2; k <= 4; ++k) {
      const auto r = max_product_ktuple(n, k);
      if (!r.exact) ok = false;
      if (!r.feasible) continue;
      if (n >= l_of_k(k)) {
        if (r.value < ktuple_conjectured(n, k)) ok = false;
        if (r.value > ktuple_upper(n, k)) ok = false;
      }
      if (k == 2 && r.value != max_product(n).value) ok = false;
      detail << n << "/" << k << ":" << r.value << " ";
    }
  }
  report("k-tuple value sandwiched by bounds, k=2 matches pair search", ok,
         detail.str());
}

void criterion8_solver_soundness() {
  bool ok = true;
  for (int n = 2; n <= 3; ++n) {
    if (max_sum(n).value != brute::max_sum(n)) ok = false;
    if (max_product(n).value != brute::max_product(n)) ok = false;
    for (int m = 1; m < (1 << n); ++m)
      if (f_nm(n, m).fnm != brute::f_nm(n, m)) ok = false;
    for (int m = 1; m <= 3; ++m) {
      const auto r = f_star(n, m);
      const BigInt b = brute::f_star(n, m);
      if (r.feasible ? (r.value != b) : (b != 0)) ok = false;
    }
    // worker-count invariance (wall time excluded)
    const json s1 = stripped(max_sum(n, kDefaultBudget, 1));
    const json p1 = stripped(max_product(n, kDefaultBudget, 1));
    for (const int w : {2, 8}) {
      if (stripped(max_sum(n, kDefaultBudget, w)) != s1) ok = false;
      if (stripped(max_product(n, kDefaultBudget, w)) != p1) ok = false;
    }
  }
  report("solvers match brute force for n<=3 and are worker invariant", ok);
}

void criterion9_connectivity() {
  bool ok = true;
  std::ostringstream detail;
  for (int n = 2; n <= 3; ++n) {
    const auto r = connectivity_check(n);
    if (!r.passed) ok = false;
    detail << "n=" << n << ":" << r.lhs << "=" << r.rhs << " ";
  }
  report("connectivity route agrees with max_sum for n=2,3", ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  criterion1_product_exact();
  criterion2_fn1_formula();
  criterion3_corollary();
  criterion4_sum_small_n();
  criterion5_suites();
  criterion6_lemma4_boundary();
  criterion7_ktuple_sandwich();
  criterion8_solver_soundness();
  criterion9_connectivity();

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(g_failures) + " CRITERIA FAILED")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
