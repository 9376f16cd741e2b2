#pragma once

#include <span>
#include <string>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/ring.hpp"

namespace fusion {

// Group ring of g: basis g, products from the table, duals are inverses.
FusionRing gen_pointed(const GroupTable& g, std::vector<std::string> labels = {});

// Basis g plus one extra simple X with gX = Xg = X and XX = sum over g.
FusionRing gen_ty(const GroupTable& g, std::vector<std::string> labels = {});

// As gen_ty but XX = sum over g + kappa X.
FusionRing gen_near_group(const GroupTable& g, int kappa, std::vector<std::string> labels = {});

// Rank n+1 ring on X_0..X_n, all self-dual, with
// N(i,j,l) = 1 iff |i-j| <= l <= min(i+j, 2n-i-j) and l = i+j (mod 2).
FusionRing gen_verlinde(int n);

// Fixed rank-6 commutative ring: invertibles Z4 = {e,g,g2,g3} plus a dual
// pair X, X' with g2 X = X, g X = X', X X' = e + g2, X X = g + g3.
FusionRing gen_moore_read();

FusionRing gen_ising();     // = gen_ty(Z2)
FusionRing gen_yang_lee();  // = gen_near_group(Z1, 1)

// Generalized Tambara-Yamagami ring from an abelian group, a subgroup
// (any generating set) and a coset representative: basis G together with
// one object X_s per coset s of gamma, with
//   g X_s = X_{gs},   X_s X_t = sum of the coset s t c,   X_s* = X_{s^-1 c^-1}.
// Associativity is re-verified at construction.
FusionRing gen_gen_ty(const GroupTable& g, std::span<const int> gamma_generators,
                      int coset_rep, std::vector<std::string> labels = {});

// Character rings of small groups from their character tables.
// Keys: "S3", "D4", "Q8", "A4".
FusionRing rep_corpus(const std::string& key);

// Componentwise product on the tensor-product basis; unit (0,0) stays 0.
FusionRing deligne_product(const FusionRing& a, const FusionRing& b);

struct NamedRing {
  std::string name;
  FusionRing ring;
};

// Deterministic evaluation corpus: pointed rings over every abelian group
// of order <= 16 and over S3, Tambara-Yamagami and near-group examples,
// the Verlinde rings up to n = 8, the generalized TY sweep over abelian
// groups of order <= 8, the character rings and a spread of products of
// rank <= 20.
std::vector<NamedRing> standard_corpus();

}  // namespace fusion
