#pragma once

// Exact and heuristic optimization over cross-Sperner configurations:
// max sum, max product, F(n,m), F*(n,m), k-tuple products, plus an
// independent vertex-connectivity cross-check of the sum optimum.
//
// Exact searches are deterministic for any worker count: branch incumbents
// start from the construction lower bound and are kept branch-local,
// so pruning never depends on scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xsperner/bounds.hpp"
#include "xsperner/family.hpp"
#include "xsperner/oracles.hpp"

namespace xsperner {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct SearchReport {
  std::string objective;  // sum | product | fnm | fstar | ktuple-product
  int n = 0;
  int m = 0;  // fnm / fstar only
  int k = 0;  // ktuple only
  BigInt value;
  std::vector<Family> witnesses;  // pair: {F, G}; ktuple: F_1..F_k
  bool exact = false;
  bool feasible = true;
  std::uint64_t nodes_explored = 0;
  double wall_time_ms = 0.0;
  nlohmann::json notes = nlohmann::json::object();

  nlohmann::json to_json() const;
};

struct IsoperimetricResult {
  int n = 0;
  int m = 0;
  BigInt fnm;
  Family minimizer;
  bool exact = false;
  std::uint64_t nodes_explored = 0;

  nlohmann::json to_json() const;
};

// max |F| * |G| over cross-Sperner pairs. Exact for n <= 4 guaranteed;
// n = 5 within budget.
SearchReport max_product(int n, std::uint64_t budget = kDefaultBudget,
                         int workers = 1);

// max |F| + |G| over cross-Sperner pairs with both families nonempty.
// notes["equals_sum_bound"] records the Theorem-1 comparison.
SearchReport max_sum(int n, std::uint64_t budget = kDefaultBudget,
                     int workers = 1);

// F(n,m) as an isoperimetric minimum on the comparability graph.
// Exact: m = 1 for n <= 20; all m for n <= 4; m <= 3 for n = 5.
IsoperimetricResult f_nm(int n, int m);

// max |G| over pairs where F is a Sperner family of size exactly m.
// Exact for n <= 4, m <= 6.
SearchReport f_star(int n, int m);

// max prod |F_i| over pairwise cross-Sperner k-tuples of nonempty families.
// Exact for n <= 3, k <= 4; heuristic (construction + local search) beyond.
SearchReport max_product_ktuple(int n, int k,
                                std::uint64_t budget = kDefaultBudget);

// Independent route: vertex connectivity of the comparability graph by
// unit-capacity max-flow; passes iff max_sum(n) = 2^n - c(Gamma_n). n <= 4.
CheckResult connectivity_check(int n);

// Test-side reference: exhaustive no-pruning searches, n <= 3.
namespace brute {
BigInt max_product(int n);
BigInt max_sum(int n);
BigInt f_nm(int n, int m);
BigInt f_star(int n, int m);
}  // namespace brute

}  // namespace xsperner
