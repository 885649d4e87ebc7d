#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xsperner/constructions.hpp"
#include "xsperner/solver.hpp"

using namespace xsperner;

namespace {

nlohmann::json stripped(const SearchReport& r) {
  auto j = r.to_json();
  j.erase("wall_time_ms");
  return j;
}

}  // namespace

TEST_CASE("max_product matches brute force for n <= 3") {
  for (int n = 2; n <= 3; ++n) {
    const auto r = max_product(n);
    CHECK(r.exact);
    CHECK(r.value == brute::max_product(n));
  }
}

TEST_CASE("max_sum matches brute force for n <= 3") {
  for (int n = 2; n <= 3; ++n) {
    const auto r = max_sum(n);
    CHECK(r.exact);
    CHECK(r.value == brute::max_sum(n));
  }
}

TEST_CASE("max_product known values and witness validity") {
  const BigInt expect[] = {1, 4, 16, 64};
  for (int n = 2; n <= 5; ++n) {
    const auto r = max_product(n);
    CHECK(r.exact);
    CHECK(r.value == expect[n - 2]);
    CHECK(r.value == product_bound(n));
    REQUIRE(r.witnesses.size() == 2);
    CHECK(is_cross_sperner(r.witnesses[0], r.witnesses[1]));
    CHECK(BigInt(r.witnesses[0].size()) * r.witnesses[1].size() == r.value);
  }
}

TEST_CASE("max_sum known values, witness validity, bound comparison") {
  const BigInt expect[] = {2, 4, 10};
  for (int n = 2; n <= 4; ++n) {
    const auto r = max_sum(n);
    CHECK(r.exact);
    CHECK(r.value == expect[n - 2]);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(is_cross_sperner(r.witnesses[0], r.witnesses[1]));
    CHECK(BigInt(r.witnesses[0].size()) + r.witnesses[1].size() == r.value);
    CHECK(r.value <= sum_bound(n));
    CHECK(r.notes["equals_sum_bound"] == true);  // attained at every small n
  }
}

TEST_CASE("pair searches are worker-count invariant") {
  for (const bool product : {true, false}) {
    const auto one = product ? max_product(4, kDefaultBudget, 1)
                             : max_sum(4, kDefaultBudget, 1);
    for (const int w : {2, 8}) {
      const auto many = product ? max_product(4, kDefaultBudget, w)
                                : max_sum(4, kDefaultBudget, w);
      CHECK(stripped(one) == stripped(many));
    }
  }
}

TEST_CASE("exhausted budget is flagged inexact, never below the construction") {
  const auto r = max_product(4, 10);
  CHECK_FALSE(r.exact);
  CHECK(r.value == 16);  // incumbent starts at the construction value
}

TEST_CASE("f_nm matches brute force for n <= 3, all m") {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 1; m < (1 << n); ++m) {
      const auto r = f_nm(n, m);
      CHECK(r.exact);
      CHECK(r.fnm == brute::f_nm(n, m));
      CHECK(r.minimizer.size() == static_cast<std::size_t>(m));
      // F(n,m) = 2^n - m - |N(minimizer)|
      CHECK(r.fnm == BigInt(1 << n) - m - BigInt(neighborhood(r.minimizer).size()));
    }
  }
}

TEST_CASE("f_nm closed form for m = 1 up to n = 20") {
  for (int n = 2; n <= 20; ++n) {
    const auto r = f_nm(n, 1);
    CHECK(r.exact);
    CHECK(r.fnm == f_n1(n));
  }
}

TEST_CASE("f_nm corollary values") {
  CHECK(f_nm(3, 2).fnm == 2);
  CHECK(f_nm(4, 4).fnm == 4);
}

TEST_CASE("f_nm heuristic stays consistent with its minimizer") {
  for (int n = 6; n <= 9; ++n) {
    const auto r = f_nm(n, 3);
    CHECK_FALSE(r.exact);
    CHECK(r.minimizer.size() == 3);
    CHECK(r.fnm == BigInt(1 << n) - 3 - BigInt(neighborhood(r.minimizer).size()));
    CHECK(r.fnm >= 0);
  }
  CHECK_THROWS_AS(f_nm(13, 2), std::invalid_argument);
  CHECK_THROWS_AS(f_nm(3, 0), std::invalid_argument);
}

TEST_CASE("f_star matches brute force for n <= 3") {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const auto r = f_star(n, m);
      const BigInt b = brute::f_star(n, m);
      if (!r.feasible) {
        CHECK(b == 0);
        continue;
      }
      CHECK(r.exact);
      CHECK(r.value == b);
      REQUIRE(r.witnesses.size() == 2);
      CHECK(r.witnesses[0].size() == static_cast<std::size_t>(m));
      CHECK(is_sperner(r.witnesses[0]));
      CHECK(is_cross_sperner(r.witnesses[0], r.witnesses[1]));
      CHECK(BigInt(r.witnesses[1].size()) == r.value);
    }
  }
  CHECK_THROWS_AS(f_star(6, 1), std::invalid_argument);
}

TEST_CASE("f_star n=4 witness roles") {
  const auto r = f_star(4, 2);
  CHECK(r.exact);
  REQUIRE(r.witnesses.size() == 2);
  CHECK(r.witnesses[0].size() == 2);
  CHECK(is_sperner(r.witnesses[0]));
  CHECK(BigInt(r.witnesses[1].size()) == r.value);
}

TEST_CASE("ktuple exact search sandwiched by the bounds, n <= 3") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 2; k <= 4; ++k) {
      const auto r = max_product_ktuple(n, k);
      if (BigInt(k) > binomial(n, n / 2)) {
        CHECK_FALSE(r.feasible);
        CHECK(r.value == 0);
        continue;
      }
      CHECK(r.exact);
      CHECK(r.feasible);
      REQUIRE(r.witnesses.size() == static_cast<std::size_t>(k));
      CHECK_NOTHROW(KTuple(r.witnesses));  // pairwise cross-Sperner
      BigInt prod = 1;
      for (const auto& f : r.witnesses) prod *= f.size();
      CHECK(prod == r.value);
      if (n >= l_of_k(k)) {
        CHECK(r.value >= ktuple_conjectured(n, k));
        CHECK(r.value <= ktuple_upper(n, k));
      }
      if (k == 2) CHECK(r.value == max_product(n).value);
    }
  }
}

TEST_CASE("ktuple heuristic beyond exact range") {
  const auto r = max_product_ktuple(5, 3);
  CHECK_FALSE(r.exact);
  CHECK(r.feasible);
  CHECK(r.value >= ktuple_conjectured(5, 3));
  CHECK(r.value <= ktuple_upper(5, 3));
  CHECK_NOTHROW(KTuple(r.witnesses));
}

TEST_CASE("connectivity_check agrees with the search optimum") {
  for (int n = 2; n <= 4; ++n) {
    const auto r = connectivity_check(n);
    CHECK(r.passed);
    CHECK(r.lhs == r.rhs);
  }
  CHECK_THROWS_AS(connectivity_check(5), std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(max_product(1), std::invalid_argument);
  CHECK_THROWS_AS(max_sum(21), std::invalid_argument);
  CHECK_THROWS_AS(max_product_ktuple(3, 1), std::invalid_argument);
}
