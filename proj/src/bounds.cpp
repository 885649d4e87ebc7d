#include "xsperner/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "xsperner/constructions.hpp"

namespace xsperner {

namespace {

BigInt pow2(long long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return BigInt(1) << static_cast<unsigned>(e);
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt neighborhood_size(int n, int s) {
  if (s < 0 || s > n)
    throw std::invalid_argument("neighborhood_size: need 0 <= s <= n");
  return pow2(s) + pow2(n - s) - 2;
}

BigInt f_n1(int n) {
  if (n < 2) throw std::invalid_argument("f_n1: need n >= 2");
  return pow2(n) - pow2((n + 1) / 2) - pow2(n / 2) + 1;
}

BigInt sum_bound(int n) { return f_n1(n) + 1; }

BigInt product_bound(int n) {
  if (n < 2) throw std::invalid_argument("product_bound: need n >= 2");
  return pow2(2LL * n - 4);
}

BigInt ktuple_upper(int n, int k) {
  if (k < 2) throw std::invalid_argument("ktuple_upper: need k >= 2");
  if (n < l_of_k(k))
    throw std::invalid_argument("ktuple_upper: need n >= l(k)");
  return pow2(static_cast<long long>(k) * n - 2LL * k);
}

BigInt ktuple_conjectured(int n, int k) {
  if (k < 2) throw std::invalid_argument("ktuple_conjectured: need k >= 2");
  const int l = l_of_k(k);
  if (n < l)
    throw std::invalid_argument("ktuple_conjectured: need n >= l(k)");
  return pow2(static_cast<long long>(k) * (n - l));
}

double gen_binomial(double x, int k) {
  if (k < 0) throw std::invalid_argument("gen_binomial: need k >= 0");
  if (x < k - 1)
    throw std::domain_error("gen_binomial: x < k-1 is off the monotone branch");
  double num = 1.0;
  for (int i = 0; i < k; ++i) num *= (x - i) / (k - i);
  return num;
}

double lovasz_x(double m, int k) {
  if (k < 1) throw std::invalid_argument("lovasz_x: need k >= 1");
  if (m < 0) throw std::invalid_argument("lovasz_x: need m >= 0");
  if (m == 0) return k - 1.0;  // degenerate: empty family
  double lo = k - 1.0;
  double hi = static_cast<double>(k);
  while (gen_binomial(hi, k) < m) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (gen_binomial(mid, k) < m)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

double lovasz_shadow_bound(double m, int k) {
  return gen_binomial(lovasz_x(m, k), k - 1);
}

BigInt w_tail(int j, int k) {
  if (j < 0) throw std::invalid_argument("w_tail: need j >= 0");
  BigInt s = 0;
  for (int i = j + 1; i <= k; ++i) s += binomial(k, i);
  return s;
}

LevelProfile::LevelProfile(int nprime_, std::vector<BigInt> counts_)
    : nprime(nprime_), counts(std::move(counts_)) {
  if (nprime < 0 || counts.size() != static_cast<std::size_t>(nprime) + 1)
    throw std::invalid_argument("LevelProfile: counts must have n'+1 entries");
  for (int j = 0; j <= nprime; ++j) {
    if (counts[static_cast<std::size_t>(j)] < 0 ||
        counts[static_cast<std::size_t>(j)] > binomial(nprime, j))
      throw std::invalid_argument("LevelProfile: a_j outside [0, C(n',j)]");
  }
}

BigInt LevelProfile::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::pair<BigInt, BigInt> lemma4_sides(const LevelProfile& profile, int k) {
  BigInt lhs = 0, rhs = 0;
  for (int j = 0; j <= profile.nprime; ++j) {
    const BigInt& a = profile.counts[static_cast<std::size_t>(j)];
    lhs += a;
    rhs += a * w_tail(j, k);
  }
  return {lhs, rhs};
}

double stirling_ratio(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0 / 3.0))
    throw std::domain_error("stirling_ratio: need 0 < alpha < 1/3");
  const double third = 1.0 / 3.0;
  const double log_denom = 2 * alpha * std::log(alpha) +
                           (1 - alpha) * std::log(1 - alpha) +
                           third * std::log(3.0) +
                           (third - alpha) * std::log(third - alpha);
  return std::exp(-log_denom);
}

nlohmann::json BoundRecord::to_json() const {
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [key, v] : params) p[key] = v;
  nlohmann::json j{{"name", name}, {"params", p}};
  if (is_real)
    j["value"] = real_value;
  else
    j["value"] = value.str();
  if (degenerate) j["degenerate"] = true;
  return j;
}

}  // namespace xsperner
