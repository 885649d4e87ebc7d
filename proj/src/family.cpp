#include "xsperner/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xsperner {

SetWord::SetWord(std::uint32_t mask_, int n_) : mask(mask_), n(n_) {
  if (n < 1 || n > kMaxSetN)
    throw std::invalid_argument("SetWord: n out of range [1, 24]");
  if (n < 32 && (mask >> n) != 0)
    throw std::invalid_argument("SetWord: mask has bits above position n-1");
}

SetWord SetWord::from_elements(const std::vector<int>& elems, int n_) {
  std::uint32_t m = 0;
  for (int e : elems) {
    if (e < 1 || e > n_)
      throw std::invalid_argument("SetWord: element outside [n]");
    m |= 1u << (e - 1);
  }
  return SetWord(m, n_);
}

std::vector<int> SetWord::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (contains_element(i)) out.push_back(i);
  return out;
}

bool comparable(const SetWord& a, const SetWord& b) {
  if (a.n != b.n)
    throw std::invalid_argument("comparable: mismatched ground-set sizes");
  return comparable_masks(a.mask, b.mask);
}

Family::Family(int n) : n_(n) {
  if (n < 1 || n > kMaxFamilyN)
    throw std::invalid_argument("Family: n out of range [1, 20]");
  const std::size_t nwords = (std::size_t{1} << n) <= 64
                                 ? 1
                                 : (std::size_t{1} << n) >> 6;
  words_.assign(nwords, 0);
}

Family Family::from_sets(int n, const std::vector<std::vector<int>>& sets) {
  Family f(n);
  for (const auto& s : sets) f.add(SetWord::from_elements(s, n).mask);
  return f;
}

Family Family::from_masks(int n, const std::vector<std::uint32_t>& masks) {
  Family f(n);
  for (auto m : masks) f.add(m);
  return f;
}

Family Family::full(int n) {
  Family f(n);
  const std::uint32_t u = f.universe_size();
  if (u <= 64) {
    f.words_[0] = (u == 64) ? ~0ull : ((1ull << u) - 1);
  } else {
    std::fill(f.words_.begin(), f.words_.end(), ~0ull);
  }
  return f;
}

void Family::add(std::uint32_t mask) {
  if (mask >= universe_size())
    throw std::invalid_argument("Family::add: mask outside 2^[n]");
  words_[mask >> 6] |= 1ull << (mask & 63);
}

void Family::remove(std::uint32_t mask) {
  if (mask >= universe_size())
    throw std::invalid_argument("Family::remove: mask outside 2^[n]");
  words_[mask >> 6] &= ~(1ull << (mask & 63));
}

std::size_t Family::size() const {
  std::size_t c = 0;
  std::uint64_t tail_mask = ~0ull;
  if (universe_size() < 64) tail_mask = (1ull << universe_size()) - 1;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    if (w + 1 == words_.size()) bits &= tail_mask;
    c += static_cast<std::size_t>(std::popcount(bits));
  }
  return c;
}

std::vector<std::uint32_t> Family::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  for_each_member([&](std::uint32_t m) { out.push_back(m); });
  return out;
}

void Family::require_same_n(const Family& o) const {
  if (n_ != o.n_)
    throw std::invalid_argument("Family: mismatched ground-set sizes");
}

Family Family::operator&(const Family& o) const {
  require_same_n(o);
  Family r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] & o.words_[i];
  return r;
}

Family Family::operator|(const Family& o) const {
  require_same_n(o);
  Family r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] | o.words_[i];
  return r;
}

Family Family::minus(const Family& o) const {
  require_same_n(o);
  Family r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] & ~o.words_[i];
  return r;
}

Family Family::negate() const {
  Family r(n_);
  std::uint64_t tail_mask = ~0ull;
  if (universe_size() < 64) tail_mask = (1ull << universe_size()) - 1;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  r.words_.back() &= tail_mask;
  return r;
}

bool Family::disjoint(const Family& o) const {
  require_same_n(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return false;
  return true;
}

bool Family::is_subset_of(const Family& o) const {
  require_same_n(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

Family up_closure(const Family& f) {
  Family r = f;
  const std::uint32_t u = r.universe_size();
  std::vector<char> mem(u);
  r.for_each_member([&](std::uint32_t m) { mem[m] = 1; });
  for (int i = 0; i < f.n(); ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = 0; m < u; ++m)
      if ((m & bit) && mem[m ^ bit]) mem[m] = 1;
  }
  Family out(f.n());
  for (std::uint32_t m = 0; m < u; ++m)
    if (mem[m]) out.add(m);
  return out;
}

Family down_closure(const Family& f) {
  const std::uint32_t u = f.universe_size();
  std::vector<char> mem(u);
  f.for_each_member([&](std::uint32_t m) { mem[m] = 1; });
  for (int i = 0; i < f.n(); ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = u; m-- > 0;)
      if (!(m & bit) && mem[m | bit]) mem[m] = 1;
  }
  Family out(f.n());
  for (std::uint32_t m = 0; m < u; ++m)
    if (mem[m]) out.add(m);
  return out;
}

Family neighborhood(const Family& u) {
  return (up_closure(u) | down_closure(u)).minus(u);
}

Family incomparables(const Family& f) {
  return (up_closure(f) | down_closure(f)).negate();
}

Family meet_family(const Family& a, const Family& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("meet_family: mismatched ground-set sizes");
  Family r(a.n());
  const auto bm = b.members();
  a.for_each_member([&](std::uint32_t ma) {
    for (auto mb : bm) r.add(ma & mb);
  });
  return r;
}

Family join_family(const Family& a, const Family& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("join_family: mismatched ground-set sizes");
  Family r(a.n());
  const auto bm = b.members();
  a.for_each_member([&](std::uint32_t ma) {
    for (auto mb : bm) r.add(ma | mb);
  });
  return r;
}

Family shadow(const Family& f, int k) {
  if (k < 1) throw std::invalid_argument("shadow: k must be >= 1");
  Family r(f.n());
  f.for_each_member([&](std::uint32_t m) {
    if (std::popcount(m) != k)
      throw std::invalid_argument("shadow: family is not k-uniform");
    std::uint32_t bits = m;
    while (bits) {
      r.add(m ^ (bits & -bits));
      bits &= bits - 1;
    }
  });
  return r;
}

Family complement_family(const Family& f) {
  Family r(f.n());
  const std::uint32_t full = f.full_mask();
  f.for_each_member([&](std::uint32_t m) { r.add(m ^ full); });
  return r;
}

Family difference_family(const Family& c) {
  if (c.empty())
    throw std::invalid_argument("difference_family: empty family");
  Family r(c.n());
  const auto ms = c.members();
  for (auto a : ms)
    for (auto b : ms) r.add(a & ~b);
  return r;
}

bool is_cross_sperner(const Family& f, const Family& g) {
  if (f.n() != g.n())
    throw std::invalid_argument("is_cross_sperner: mismatched ground-set sizes");
  // comparability is non-strict, so this also enforces F and G disjoint
  return (up_closure(f) | down_closure(f)).disjoint(g);
}

bool is_sperner(const Family& f) {
  const auto ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (comparable_masks(ms[i], ms[j])) return false;
  return true;
}

bool is_downward_closed(const Family& f) {
  bool ok = true;
  f.for_each_member([&](std::uint32_t m) {
    std::uint32_t bits = m;
    while (bits) {
      if (!f.contains(m ^ (bits & -bits))) ok = false;
      bits &= bits - 1;
    }
  });
  return ok;
}

bool is_convex(const Family& f) {
  const auto ms = f.members();
  for (auto lo : ms) {
    for (auto hi : ms) {
      if (lo == hi || (lo & hi) != lo) continue;
      const std::uint32_t diff = hi ^ lo;
      // strict intermediate sets: lo | s for proper nonempty submasks s of diff
      for (std::uint32_t s = (diff - 1) & diff; s; s = (s - 1) & diff)
        if (!f.contains(lo | s)) return false;
    }
  }
  return true;
}

bool family_less(const Family& a, const Family& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

bool pair_less(const std::pair<Family, Family>& a,
               const std::pair<Family, Family>& b) {
  if (family_less(a.first, b.first)) return true;
  if (family_less(b.first, a.first)) return false;
  return family_less(a.second, b.second);
}

namespace {

std::uint32_t apply_perm(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  std::uint32_t bits = mask;
  while (bits) {
    const int i = std::countr_zero(bits);
    out |= 1u << perm[static_cast<std::size_t>(i)];
    bits &= bits - 1;
  }
  return out;
}

Family apply_perm(const Family& f, const std::vector<int>& perm,
                  bool complement) {
  Family r(f.n());
  const std::uint32_t full = f.full_mask();
  f.for_each_member([&](std::uint32_t m) {
    std::uint32_t img = apply_perm(m, perm);
    if (complement) img ^= full;
    r.add(img);
  });
  return r;
}

template <typename Fn>
void for_each_group_element(int n, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm, false);
    fn(perm, true);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Family canonical_form(const Family& f) {
  if (f.n() > kMaxCanonicalN)
    throw std::invalid_argument(
        "canonical_form: n > 12 refused (use hashing instead)");
  Family best = f;
  for_each_group_element(f.n(), [&](const std::vector<int>& perm, bool comp) {
    Family img = apply_perm(f, perm, comp);
    if (family_less(img, best)) best = std::move(img);
  });
  return best;
}

std::pair<Family, Family> canonical_pair(const Family& f, const Family& g) {
  if (f.n() != g.n())
    throw std::invalid_argument("canonical_pair: mismatched ground-set sizes");
  if (f.n() > kMaxCanonicalN)
    throw std::invalid_argument(
        "canonical_pair: n > 12 refused (use hashing instead)");
  std::pair<Family, Family> best{f, g};
  for_each_group_element(f.n(), [&](const std::vector<int>& perm, bool comp) {
    Family fi = apply_perm(f, perm, comp);
    Family gi = apply_perm(g, perm, comp);
    std::pair<Family, Family> cand{fi, gi};
    if (pair_less(cand, best)) best = cand;
    std::swap(cand.first, cand.second);
    if (pair_less(cand, best)) best = std::move(cand);
  });
  return best;
}

std::pair<Family, Family> canonical_pair_ordered(const Family& f,
                                                 const Family& g) {
  if (f.n() != g.n())
    throw std::invalid_argument(
        "canonical_pair_ordered: mismatched ground-set sizes");
  if (f.n() > kMaxCanonicalN)
    throw std::invalid_argument(
        "canonical_pair_ordered: n > 12 refused (use hashing instead)");
  std::pair<Family, Family> best{f, g};
  for_each_group_element(f.n(), [&](const std::vector<int>& perm, bool comp) {
    std::pair<Family, Family> cand{apply_perm(f, perm, comp),
                                   apply_perm(g, perm, comp)};
    if (pair_less(cand, best)) best = std::move(cand);
  });
  return best;
}

CrossPair::CrossPair(Family f, Family g)
    : n(f.n()), F(std::move(f)), G(std::move(g)) {
  if (!is_cross_sperner(F, G))
    throw std::invalid_argument("CrossPair: families are not cross-Sperner");
}

}  // namespace xsperner
