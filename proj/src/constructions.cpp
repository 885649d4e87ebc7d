#include "xsperner/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace xsperner {

KTuple::KTuple(std::vector<Family> fams)
    : n(fams.empty() ? 1 : fams.front().n()),
      k(static_cast<int>(fams.size())),
      families(std::move(fams)) {
  if (families.empty()) throw std::invalid_argument("KTuple: empty tuple");
  for (std::size_t i = 0; i < families.size(); ++i)
    for (std::size_t j = i + 1; j < families.size(); ++j)
      if (!is_cross_sperner(families[i], families[j]))
        throw std::invalid_argument("KTuple: families not pairwise cross-Sperner");
}

CrossPair theorem1_extremal(int n, int s) {
  if (s < 1 || s > n - 1)
    throw std::invalid_argument("theorem1_extremal: need 1 <= s <= n-1");
  Family f(n);
  f.add((1u << s) - 1u);
  return CrossPair(f, incomparables(f));
}

CrossPair theorem1_extremal(int n) { return theorem1_extremal(n, (n + 1) / 2); }

CrossPair theorem2_extremal(int n) {
  if (n < 2) throw std::invalid_argument("theorem2_extremal: need n >= 2");
  Family f(n);
  Family g(n);
  const std::uint32_t first = 1u;
  const std::uint32_t last = 1u << (n - 1);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if ((m & first) && !(m & last)) f.add(m);
    if ((m & last) && !(m & first)) g.add(m);
  }
  return CrossPair(f, g);
}

namespace {

unsigned long long binom_ull(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / i;
  return r;
}

}  // namespace

int l_of_k(int k) {
  if (k < 1) throw std::invalid_argument("l_of_k: need k >= 1");
  for (int l = 1;; ++l)
    if (binom_ull(l, l / 2) >= static_cast<unsigned long long>(k)) return l;
}

Family sperner_middle_layer(int l, int k) {
  const int half = l / 2;
  if (static_cast<unsigned long long>(k) > binom_ull(l, half))
    throw std::invalid_argument("sperner_middle_layer: k exceeds C(l, l/2)");
  // lexicographically first under the sorted element-list order, which is
  // not the ascending-mask (colex) order: {1,4} precedes {2,3}
  std::vector<std::vector<int>> subsets;
  for (std::uint32_t m = 0; m < (1u << l); ++m)
    if (std::popcount(m) == half) subsets.push_back(SetWord(m, l).elements());
  std::sort(subsets.begin(), subsets.end());
  subsets.resize(static_cast<std::size_t>(k));
  return Family::from_sets(l, subsets);
}

KTuple ktuple_construction(int n, int k) {
  const int l = l_of_k(k);
  if (n < l)
    throw std::invalid_argument("ktuple_construction: need n >= l(k)");
  const Family s = sperner_middle_layer(l, k);
  const std::uint32_t lmask = (1u << l) - 1u;
  std::vector<Family> fams;
  s.for_each_member([&](std::uint32_t si) {
    Family fi(n);
    for (std::uint32_t m = 0; m < (1u << n); ++m)
      if ((m & lmask) == si) fi.add(m);
    fams.push_back(std::move(fi));
  });
  return KTuple(std::move(fams));
}

Family b_sets(const SetWord& f0, const SetWord& fstar) {
  if (f0.n != fstar.n)
    throw std::invalid_argument("b_sets: mismatched ground-set sizes");
  if (f0.mask == fstar.mask || (f0.mask & fstar.mask) != f0.mask)
    throw std::invalid_argument("b_sets: F0 must be a proper subset of F*");
  const int m = f0.size();
  Family out(f0.n);
  // all subsets of F0, including empty and full
  std::uint32_t sub = f0.mask;
  while (true) {
    const std::uint32_t cand = fstar.mask & ~sub;
    if (std::popcount(cand) < m) out.add(cand);
    if (sub == 0) break;
    sub = (sub - 1) & f0.mask;
  }
  return out;
}

}  // namespace xsperner
