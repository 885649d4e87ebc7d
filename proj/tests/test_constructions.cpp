#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xsperner/bounds.hpp"
#include "xsperner/constructions.hpp"

using namespace xsperner;

TEST_CASE("theorem1_extremal sizes") {
  CHECK(theorem1_extremal(4, 2).G.size() == 9);  // 16 - 4 - 4 + 1
  CHECK(theorem1_extremal(3, 2).G.size() == 3);  // 8 - 4 - 2 + 1
  const CrossPair p = theorem1_extremal(2, 1);
  CHECK(p.F == Family::from_sets(2, {{1}}));
  CHECK(p.G == Family::from_sets(2, {{2}}));
  CHECK_THROWS_AS(theorem1_extremal(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_extremal(3, 3), std::invalid_argument);
}

TEST_CASE("theorem1_extremal attains F(n,1)+1 and is maximized at the middle") {
  for (int n = 2; n <= 10; ++n) {
    const CrossPair p = theorem1_extremal(n);
    CHECK(BigInt(p.F.size()) + p.G.size() == sum_bound(n));
    // s = ceil(n/2) (or floor) strictly beats every other size
    const auto sum_at = [&](int s) {
      const CrossPair q = theorem1_extremal(n, s);
      return BigInt(q.F.size()) + q.G.size();
    };
    const BigInt best = sum_at((n + 1) / 2);
    CHECK(sum_at(n / 2) == best);
    for (int s = 1; s <= n - 1; ++s)
      if (s != n / 2 && s != (n + 1) / 2) CHECK(sum_at(s) < best);
  }
}

TEST_CASE("theorem2_extremal") {
  const CrossPair p2 = theorem2_extremal(2);
  CHECK(p2.F == Family::from_sets(2, {{1}}));
  CHECK(p2.G == Family::from_sets(2, {{2}}));

  const CrossPair p3 = theorem2_extremal(3);
  CHECK(p3.F == Family::from_sets(3, {{1}, {1, 2}}));
  CHECK(p3.G == Family::from_sets(3, {{3}, {2, 3}}));

  CHECK(theorem2_extremal(5).F.size() == 8);
  CHECK(theorem2_extremal(5).G.size() == 8);

  for (int n = 2; n <= 10; ++n) {
    const CrossPair p = theorem2_extremal(n);
    CHECK(p.F.size() == std::size_t{1} << (n - 2));
    CHECK(BigInt(p.F.size()) * p.G.size() == product_bound(n));
  }
  CHECK_THROWS_AS(theorem2_extremal(1), std::invalid_argument);
}

TEST_CASE("l_of_k") {
  CHECK(l_of_k(1) == 1);
  CHECK(l_of_k(2) == 2);
  CHECK(l_of_k(3) == 3);
  CHECK(l_of_k(4) == 4);
  CHECK(l_of_k(6) == 4);
  CHECK(l_of_k(7) == 5);
  CHECK_THROWS_AS(l_of_k(0), std::invalid_argument);
}

TEST_CASE("sperner_middle_layer") {
  CHECK(sperner_middle_layer(3, 3) == Family::from_sets(3, {{1}, {2}, {3}}));
  CHECK(sperner_middle_layer(2, 2) == Family::from_sets(2, {{1}, {2}}));
  const Family f4 = sperner_middle_layer(4, 4);
  CHECK(f4.size() == 4);
  CHECK(is_sperner(f4));
  // lex-first four 2-subsets of [4] by element lists
  CHECK(f4 == Family::from_sets(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}));
  CHECK_THROWS_AS(sperner_middle_layer(3, 4), std::invalid_argument);
}

TEST_CASE("ktuple_construction") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 2; k <= 6; ++k) {
      const int l = l_of_k(k);
      if (n < l) {
        CHECK_THROWS_AS(ktuple_construction(n, k), std::invalid_argument);
        continue;
      }
      const KTuple t = ktuple_construction(n, k);  // ctor validates pairwise
      BigInt prod = 1;
      for (const auto& f : t.families) {
        CHECK(f.size() == std::size_t{1} << (n - l));
        prod *= f.size();
      }
      CHECK(prod == ktuple_conjectured(n, k));
      CHECK(prod <= ktuple_upper(n, k));
    }
  }
  // k = 2 coincides with the theorem2 value
  for (int n = 2; n <= 8; ++n) {
    const KTuple t = ktuple_construction(n, 2);
    CHECK(BigInt(t.families[0].size()) * t.families[1].size() ==
          product_bound(n));
  }
}

TEST_CASE("ktuple n=3 k=3 is three singletons") {
  const KTuple t = ktuple_construction(3, 3);
  BigInt prod = 1;
  for (const auto& f : t.families) {
    CHECK(f.size() == 1);
    prod *= f.size();
  }
  CHECK(prod == 1);
}

TEST_CASE("b_sets examples") {
  const int n = 3;
  CHECK(b_sets(SetWord::from_elements({1, 2}, n),
               SetWord::from_elements({1, 2, 3}, n)) ==
        Family::from_sets(n, {{3}}));
  CHECK(b_sets(SetWord::from_elements({1}, 2),
               SetWord::from_elements({1, 2}, 2))
            .empty());
  CHECK_THROWS_AS(b_sets(SetWord::from_elements({3}, 3),
                         SetWord::from_elements({1, 2}, 3)),
                  std::invalid_argument);
}

TEST_CASE("b_sets size formula against enumeration") {
  for (int n = 2; n <= 10; ++n) {
    const std::uint32_t u = 1u << n;
    for (std::uint32_t fstar = 1; fstar < u; ++fstar) {
      // proper subsets f0 of fstar
      for (std::uint32_t f0 = (fstar - 1) & fstar; f0;
           f0 = (f0 - 1) & fstar) {
        const int m = std::popcount(f0);
        const int fixed = std::popcount(fstar ^ f0);  // |F* \ F0|
        const Family b = b_sets(SetWord(f0, n), SetWord(fstar, n));
        BigInt expect = 0;
        for (int i = fixed + 1; i <= m; ++i) expect += binomial(m, i);
        CHECK(BigInt(b.size()) == expect);
      }
    }
  }
}

TEST_CASE("b_sets of distinct supersets are disjoint") {
  const int n = 5;
  const SetWord f0 = SetWord::from_elements({1, 2}, n);
  std::vector<SetWord> supersets;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (m != f0.mask && (m & f0.mask) == f0.mask) supersets.emplace_back(m, n);
  for (std::size_t i = 0; i < supersets.size(); ++i)
    for (std::size_t j = i + 1; j < supersets.size(); ++j)
      CHECK(b_sets(f0, supersets[i]).disjoint(b_sets(f0, supersets[j])));
}

TEST_CASE("KTuple validates pairwise") {
  CHECK_THROWS_AS(KTuple({Family::from_sets(3, {{1}}),
                          Family::from_sets(3, {{1, 2}})}),
                  std::invalid_argument);
}
