#pragma once

// Subsets of [n] as bitmasks and families of subsets as 2^n-bit
// characteristic bitsets, with the comparability-graph operators
// (neighborhood, incomparables, shadow, meet/join, ...) built on top.
//
// Conventions:
//   - element i of [n] is bit i-1 of the mask (bit 0 = element 1)
//   - a family's bitset is indexed by subset mask: bit j <=> mask j is a member

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace xsperner {

inline constexpr int kMaxSetN = 24;     // SetWord ground-set cap
inline constexpr int kMaxFamilyN = 20;  // whole-family bitset cap (2^20 bits)
inline constexpr int kMaxCanonicalN = 12;  // explicit orbit minimization cap

// One subset of [n].
struct SetWord {
  std::uint32_t mask = 0;
  int n = 0;

  SetWord() = default;
  SetWord(std::uint32_t mask, int n);

  static SetWord from_elements(const std::vector<int>& elems, int n);

  int size() const { return std::popcount(mask); }
  bool contains_element(int i) const { return (mask >> (i - 1)) & 1u; }
  std::vector<int> elements() const;

  friend bool operator==(const SetWord&, const SetWord&) = default;
};

// True iff one set contains the other (non-strict: equal sets are comparable).
bool comparable(const SetWord& a, const SetWord& b);
inline bool comparable_masks(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t meet = a & b;
  return meet == a || meet == b;
}

// A family of subsets of [n], stored as a packed 2^n-bit characteristic set.
class Family {
 public:
  explicit Family(int n);
  Family() : Family(1) {}

  static Family from_sets(int n, const std::vector<std::vector<int>>& sets);
  static Family from_masks(int n, const std::vector<std::uint32_t>& masks);
  static Family full(int n);  // all of 2^[n]

  int n() const { return n_; }
  std::uint32_t universe_size() const { return 1u << n_; }
  std::uint32_t full_mask() const { return (1u << n_) - 1u; }

  bool contains(std::uint32_t mask) const {
    return (words_[mask >> 6] >> (mask & 63)) & 1ull;
  }
  void add(std::uint32_t mask);
  void remove(std::uint32_t mask);

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // Member masks in increasing order.
  std::vector<std::uint32_t> members() const;
  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<std::uint32_t>((w << 6) + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  Family operator&(const Family& o) const;
  Family operator|(const Family& o) const;
  Family minus(const Family& o) const;  // set difference
  Family negate() const;                // complement within 2^[n]
  bool disjoint(const Family& o) const;
  bool is_subset_of(const Family& o) const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void require_same_n(const Family& o) const;

  int n_;
  std::vector<std::uint64_t> words_;
};

// All sets with a subset in F (includes F's members).
Family up_closure(const Family& f);
// All sets with a superset in F (includes F's members).
Family down_closure(const Family& f);

// Sets strictly comparable to some member of U, excluding U itself.
Family neighborhood(const Family& u);

// Sets incomparable to every member of F: the unique maximal cross-Sperner
// partner of a nonempty F.
Family incomparables(const Family& f);

Family meet_family(const Family& a, const Family& b);  // pairwise intersections
Family join_family(const Family& a, const Family& b);  // pairwise unions

// (k-1)-subsets contained in some member of a k-uniform family.
Family shadow(const Family& f, int k);

Family complement_family(const Family& f);

// All pairwise differences C \ C' (includes the empty set from C = C').
Family difference_family(const Family& c);

bool is_cross_sperner(const Family& f, const Family& g);
bool is_sperner(const Family& f);
bool is_downward_closed(const Family& f);
bool is_convex(const Family& f);

// Total order on families with equal n: lexicographic on the sorted member
// mask vectors. Used by the canonicalizer and solver tie-breaking.
bool family_less(const Family& a, const Family& b);
bool pair_less(const std::pair<Family, Family>& a,
               const std::pair<Family, Family>& b);

// Least image of the family under all n! coordinate permutations and global
// complementation. Constant on orbits, idempotent. Refuses n > 12.
Family canonical_form(const Family& f);

// As above, also minimizing over the (F,G) swap.
std::pair<Family, Family> canonical_pair(const Family& f, const Family& g);

// Orbit minimization without the swap, for pairs whose slots play
// asymmetric roles (e.g. F constrained to be Sperner of a given size).
std::pair<Family, Family> canonical_pair_ordered(const Family& f,
                                                 const Family& g);

// A validated cross-Sperner pair.
struct CrossPair {
  int n;
  Family F;
  Family G;

  CrossPair(Family f, Family g);  // throws if not cross-Sperner
};

}  // namespace xsperner
