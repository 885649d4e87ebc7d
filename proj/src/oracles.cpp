#include "xsperner/oracles.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "xsperner/serialize.hpp"

namespace xsperner {

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j{{"name", name},
                   {"passed", passed},
                   {"lhs", lhs},
                   {"rhs", rhs},
                   {"witness", witness}};
  if (!applicable) j["applicable"] = false;
  return j;
}

nlohmann::json SuiteSummary::to_json() const {
  return nlohmann::json{{"suite", suite},   {"n", n},
                        {"trials", trials}, {"passed", passed},
                        {"failed", failed}, {"seed", seed}};
}

CheckResult check_four_functions(const Family& a, const Family& b) {
  CheckResult r;
  r.name = "four-functions";
  const BigInt lhs = BigInt(a.size()) * BigInt(b.size());
  const BigInt rhs =
      BigInt(meet_family(a, b).size()) * BigInt(join_family(a, b).size());
  r.passed = lhs <= rhs;
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.witness = {{"A", family_to_json(a)}, {"B", family_to_json(b)}};
  return r;
}

CheckResult check_partition_lemma(const CrossPair& pair) {
  CheckResult r;
  r.name = "partition-lemma";
  const Family meet = meet_family(pair.F, pair.G);
  const Family join = join_family(pair.F, pair.G);
  const Family fams[4] = {pair.F, pair.G, meet, join};
  r.passed = true;
  for (int i = 0; i < 4 && r.passed; ++i)
    for (int j = i + 1; j < 4 && r.passed; ++j)
      if (!fams[i].disjoint(fams[j])) r.passed = false;
  r.lhs = std::to_string(pair.F.size() + pair.G.size() + meet.size() +
                         join.size());
  r.rhs = std::to_string((pair.F | pair.G | meet | join).size());
  r.witness = {{"F", family_to_json(pair.F)},
               {"G", family_to_json(pair.G)},
               {"meet", family_to_json(meet)},
               {"join", family_to_json(join)}};
  return r;
}

CheckResult check_marica_schonheim(const Family& c) {
  if (c.empty())
    throw std::invalid_argument("check_marica_schonheim: empty family");
  CheckResult r;
  r.name = "marica-schonheim";
  const Family d = difference_family(c);
  r.passed = d.size() >= c.size();
  r.lhs = std::to_string(d.size());
  r.rhs = std::to_string(c.size());
  r.witness = {{"C", family_to_json(c)}, {"D", family_to_json(d)}};
  return r;
}

CheckResult check_lovasz(const Family& f, int k) {
  if (f.empty()) throw std::invalid_argument("check_lovasz: empty family");
  CheckResult r;
  r.name = "lovasz-shadow";
  const Family sh = shadow(f, k);  // throws on non-uniform input
  const double bound = lovasz_shadow_bound(static_cast<double>(f.size()), k);
  r.passed = static_cast<double>(sh.size()) >= bound - 1e-9;
  r.lhs = std::to_string(sh.size());
  r.rhs = std::to_string(bound);
  r.witness = {{"F", family_to_json(f)}, {"k", k}};
  return r;
}

CheckResult check_lemma4(const Family& a, int k) {
  if (a.empty()) throw std::invalid_argument("check_lemma4: empty family");
  if (!is_downward_closed(a))
    throw std::invalid_argument("check_lemma4: family not downward closed");
  const int nprime = a.n();
  if (3 * k < nprime)
    throw std::invalid_argument("check_lemma4: hypothesis k >= n'/3 violated");
  std::vector<BigInt> counts(static_cast<std::size_t>(nprime) + 1, 0);
  a.for_each_member([&](std::uint32_t m) {
    counts[static_cast<std::size_t>(std::popcount(m))] += 1;
  });
  const auto [lhs, rhs] = lemma4_sides(LevelProfile(nprime, counts), k);
  CheckResult r;
  r.name = "lemma4";
  r.passed = lhs < rhs;
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.witness = {{"A", family_to_json(a)}, {"k", k}, {"nprime", nprime}};
  return r;
}

CheckResult check_proposition5(const CrossPair& pair) {
  if (pair.F.empty() || pair.G.empty())
    throw std::invalid_argument("check_proposition5: families must be nonempty");
  CheckResult r;
  r.name = "proposition5";
  int f0 = pair.n, g0 = pair.n;
  pair.F.for_each_member(
      [&](std::uint32_t m) { f0 = std::min(f0, std::popcount(m)); });
  pair.G.for_each_member(
      [&](std::uint32_t m) { g0 = std::min(g0, std::popcount(m)); });
  const int threshold = (pair.n + 1) / 2 - 1;
  r.witness = {{"F", family_to_json(pair.F)},
               {"G", family_to_json(pair.G)},
               {"min_sizes", {f0, g0}}};
  if (f0 + g0 >= threshold) {
    r.passed = true;
    r.applicable = false;
    r.lhs = std::to_string(f0 + g0);
    r.rhs = std::to_string(threshold);
    return r;
  }
  const BigInt total = BigInt(pair.F.size()) + BigInt(pair.G.size());
  const BigInt limit = f_n1(pair.n);
  r.passed = total < limit;
  r.lhs = total.str();
  r.rhs = limit.str();
  return r;
}

namespace {

// Convex closure: add sandwiched sets until stable.
Family convex_closure(Family f) {
  bool changed = true;
  while (changed) {
    changed = false;
    const auto ms = f.members();
    for (auto lo : ms) {
      for (auto hi : ms) {
        if (lo == hi || (lo & hi) != lo) continue;
        const std::uint32_t diff = hi ^ lo;
        for (std::uint32_t s = (diff - 1) & diff; s; s = (s - 1) & diff) {
          if (!f.contains(lo | s)) {
            f.add(lo | s);
            changed = true;
          }
        }
      }
    }
  }
  return f;
}

}  // namespace

Family random_family(int n, std::uint64_t seed, FamilyFilter filter, int k) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("random_family: need 1 <= n <= 12");
  std::mt19937_64 rng(seed);
  const std::uint32_t u = 1u << n;
  // family sizes capped at 32 members pre-closure to keep pairwise suites cheap
  const std::uint32_t cap = std::min<std::uint32_t>(u, 32);
  std::uniform_int_distribution<std::uint32_t> size_dist(1, cap);
  std::uniform_int_distribution<std::uint32_t> mask_dist(0, u - 1);

  for (int attempt = 0; attempt < 256; ++attempt) {
    Family f(n);
    const std::uint32_t target = size_dist(rng);
    if (filter == FamilyFilter::Uniform) {
      if (k < 0 || k > n)
        throw std::invalid_argument("random_family: uniform filter needs 0<=k<=n");
      for (std::uint32_t t = 0; t < 4 * target; ++t) {
        const std::uint32_t m = mask_dist(rng);
        if (std::popcount(m) == k) f.add(m);
        if (f.size() >= target) break;
      }
      if (f.empty()) continue;
      return f;
    }
    for (std::uint32_t t = 0; t < target; ++t) f.add(mask_dist(rng));
    switch (filter) {
      case FamilyFilter::Any:
        return f;
      case FamilyFilter::DownwardClosed:
        return down_closure(f);
      case FamilyFilter::Convex:
        return convex_closure(f);
      case FamilyFilter::Sperner: {
        Family s(n);
        for (auto m : f.members()) {
          bool ok = true;
          s.for_each_member([&](std::uint32_t prev) {
            if (comparable_masks(prev, m)) ok = false;
          });
          if (ok) s.add(m);
        }
        if (!s.empty()) return s;
        break;
      }
      case FamilyFilter::Uniform:
        break;  // handled above
    }
  }
  throw std::runtime_error("random_family: generation failed after retries");
}

CrossPair random_cross_sperner_pair(int n, std::uint64_t seed) {
  if (n < 2 || n > 12)
    throw std::invalid_argument("random_cross_sperner_pair: need 2 <= n <= 12");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Family f = random_family(n, rng());
    const Family inc = incomparables(f);
    if (inc.empty()) continue;
    const auto cand = inc.members();
    Family g(n);
    for (auto m : cand)
      if (rng() & 1) g.add(m);
    if (g.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
      g.add(cand[pick(rng)]);
    }
    return CrossPair(f, g);
  }
  throw std::runtime_error("random_cross_sperner_pair: generation failed");
}

SuiteSummary run_suite(const std::string& suite, int n, int trials,
                       std::uint64_t seed, const CheckSink& sink, int k) {
  SuiteSummary s;
  s.suite = suite;
  s.n = n;
  s.trials = trials;
  s.seed = seed;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t inst_seed = seed + static_cast<std::uint64_t>(i);
    CheckResult r;
    if (suite == "four-functions") {
      const Family a = random_family(n, inst_seed * 2 + 1);
      const Family b = random_family(n, inst_seed * 2 + 2);
      r = check_four_functions(a, b);
    } else if (suite == "partition") {
      r = check_partition_lemma(random_cross_sperner_pair(n, inst_seed));
    } else if (suite == "marica") {
      r = check_marica_schonheim(random_family(n, inst_seed));
    } else if (suite == "lovasz") {
      const int kk = k > 0 ? k : 1 + i % std::min(6, n);
      r = check_lovasz(random_family(n, inst_seed, FamilyFilter::Uniform, kk),
                       kk);
    } else if (suite == "prop5") {
      r = check_proposition5(random_cross_sperner_pair(n, inst_seed));
    } else {
      throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }
    if (r.passed)
      ++s.passed;
    else
      ++s.failed;
    if (sink) sink(i, r);
  }
  return s;
}

}  // namespace xsperner
