#pragma once

// Closed-form bound evaluators: neighborhood sizes, F(n,1), the product
// bound, k-tuple bounds, the real-parameter binomial and its inverse for
// the Lovasz shadow theorem, and the Stirling-ratio estimate.
//
// Exact formulas are computed in arbitrary-precision integers; 2^{kn-2k}
// overflows 64 bits quickly.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace xsperner {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);

// 2^s + 2^{n-s} - 2, minimized at s = ceil(n/2).
BigInt neighborhood_size(int n, int s);

// F(n,1) = 2^n - 2^{ceil(n/2)} - 2^{floor(n/2)} + 1, n >= 2.
BigInt f_n1(int n);
BigInt sum_bound(int n);  // F(n,1) + 1

BigInt product_bound(int n);  // 2^{2n-4}, n >= 2

BigInt ktuple_upper(int n, int k);        // 2^{kn-2k}
BigInt ktuple_conjectured(int n, int k);  // 2^{k(n-l)}, l = l_of_k(k)

// Generalized binomial C(x,k) = prod_{i<k}(x-i)/k!, monotone on x >= k-1.
double gen_binomial(double x, int k);

// Unique x >= k-1 with C(x,k) = m, by bisection to relative 1e-12.
double lovasz_x(double m, int k);
// C(x, k-1) at that x; the shadow lower bound.
double lovasz_shadow_bound(double m, int k);

// Tail sum w(j) = sum_{i=j+1}^k C(k,i); zero for j >= k.
BigInt w_tail(int j, int k);

// Per-cardinality counts (a_0,...,a_{n'}) of a family over [n'].
struct LevelProfile {
  int nprime;
  std::vector<BigInt> counts;  // size nprime+1

  LevelProfile(int nprime_, std::vector<BigInt> counts_);
  BigInt total() const;
};

// LHS = sum a_j, RHS = sum a_j w(j,k); caller judges the strict inequality.
std::pair<BigInt, BigInt> lemma4_sides(const LevelProfile& profile, int k);

// rho(alpha) = 1 / (alpha^{2a} (1-a)^{1-a} 3^{1/3} (1/3-a)^{1/3-a}),
// 0 < alpha < 1/3.
double stirling_ratio(double alpha);

// A named, reproducible bound value.
struct BoundRecord {
  std::string name;
  std::map<std::string, long long> params;
  BigInt value;
  double real_value = 0.0;  // used when the bound is real-valued
  bool is_real = false;
  bool degenerate = false;

  nlohmann::json to_json() const;
};

}  // namespace xsperner
