#pragma once

// Explicit extremal and near-extremal family constructions used as
// lower-bound witnesses and test fixtures.

#include <vector>

#include "xsperner/family.hpp"

namespace xsperner {

// A tuple (F_1, ..., F_k) validated pairwise cross-Sperner.
struct KTuple {
  int n;
  int k;
  std::vector<Family> families;

  explicit KTuple(std::vector<Family> fams);  // throws if not pairwise c-S
};

// F = {S} with S = {1,...,s}; G = all sets incomparable to S.
// |G| = 2^n - 2^s - 2^{n-s} + 1.
CrossPair theorem1_extremal(int n, int s);
CrossPair theorem1_extremal(int n);  // s = ceil(n/2)

// F = {A : 1 in A, n not in A}, G = {B : n in B, 1 not in B};
// |F| = |G| = 2^{n-2}.
CrossPair theorem2_extremal(int n);

// Smallest l with C(l, floor(l/2)) >= k.
int l_of_k(int k);

// The k lexicographically first floor(l/2)-subsets of [l]; Sperner.
Family sperner_middle_layer(int l, int k);

// F_i = {F in 2^[n] : F intersect [l] = S_i} for the lex-first middle-layer
// Sperner family S_1..S_k; each |F_i| = 2^{n-l}, product 2^{k(n-l)}.
KTuple ktuple_construction(int n, int k);

// B(F*) = {F* \ F0' : F0' subset of F0, |F* \ F0'| < |F0|}.
Family b_sets(const SetWord& f0, const SetWord& fstar);

}  // namespace xsperner
