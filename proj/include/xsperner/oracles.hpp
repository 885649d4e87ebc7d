#pragma once

// Executable instance checkers for the supporting lemmas and theorems,
// plus seeded random instance generators driving the property suites.
// Passing a check is evidence about the implementation, never a proof.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "xsperner/bounds.hpp"
#include "xsperner/constructions.hpp"
#include "xsperner/family.hpp"

namespace xsperner {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool applicable = true;  // false: hypothesis did not hold, vacuous pass
  std::string lhs;
  std::string rhs;
  nlohmann::json witness;  // serialized instance, enough to re-verify by hand

  nlohmann::json to_json() const;
};

// |A||B| <= |A meet B||A join B| (a theorem; failure = implementation bug).
CheckResult check_four_functions(const Family& a, const Family& b);

// F, G, F meet G, F join G pairwise disjoint for a cross-Sperner pair.
CheckResult check_partition_lemma(const CrossPair& pair);

// |D(C)| >= |C| for nonempty C.
CheckResult check_marica_schonheim(const Family& c);

// |shadow(F,k)| >= C(x,k-1) where C(x,k) = |F|; slack 1e-9.
CheckResult check_lovasz(const Family& f, int k);

// Strict inequality |A| < sum_A sum_{i=|A|+1}^k C(k,i) for nonempty
// downward-closed A over [n'] with 3k >= n'. Small-n' failures are
// findings, not bugs.
CheckResult check_lemma4(const Family& a, int k);

// If min|F| + min|G| < ceil(n/2) - 1 then |F|+|G| < F(n,1); otherwise
// reported not applicable.
CheckResult check_proposition5(const CrossPair& pair);

enum class FamilyFilter { Any, DownwardClosed, Uniform, Sperner, Convex };

// Deterministic seeded generators (n <= 12).
Family random_family(int n, std::uint64_t seed,
                     FamilyFilter filter = FamilyFilter::Any, int k = 0);
CrossPair random_cross_sperner_pair(int n, std::uint64_t seed);

// Named randomized suites. Instance i derives its seed as seed + i, so any
// failure is replayable from its CheckResult alone.
struct SuiteSummary {
  std::string suite;
  int n = 0;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  std::uint64_t seed = 0;

  bool all_passed() const { return failed == 0; }
  nlohmann::json to_json() const;
};

using CheckSink = std::function<void(int index, const CheckResult&)>;

// suite in {four-functions, partition, marica, lovasz, prop5}.
// For "lovasz", k picks the uniformity (default: cycle k over 1..6).
SuiteSummary run_suite(const std::string& suite, int n, int trials,
                       std::uint64_t seed, const CheckSink& sink = nullptr,
                       int k = 0);

}  // namespace xsperner
