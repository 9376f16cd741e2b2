#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusion/grading.hpp"
#include "fusion/group.hpp"
#include "fusion/ring.hpp"
#include "fusion/structure.hpp"

namespace fusion {

struct TheoremCheck {
  std::string id;
  bool hypotheses_met = false;
  bool conclusion_holds = true;  // meaningful only when hypotheses_met
  std::string witness;           // failure detail or gate explanation
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool all_pass() const;
};

// Structural facts checked on any ring; gated checks report their unmet
// hypotheses instead of failing:
//   faithful-cyclic-grading        per-simple order of the grade divides the
//                                  object order; a faithful simple forces a
//                                  cyclic grading group whose order divides
//                                  the object order
//   exponent-divides-order-lcm     exp U | lcm of simple orders; all simples
//                                  self-dual forces an elementary abelian
//                                  2-group
//   prime-order-divides-dim        nilpotent + a simple of prime order p
//                                  forces p | FPdim
//   prime-power-orders-dim         nilpotent + all orders powers of one p
//                                  forces FPdim = p^m
//   rank1-involution-selfdual      class <= 2 + order-2 grade with a rank-1
//                                  component forces that simple to be an
//                                  involution
//   generator-lcm-bounds-exponent  commutative: exp U | lcm of the orders of
//                                  a greedy generating set
//   full-support-subring-is-whole  commutative nilpotent, rank <= cap: no
//                                  proper subring meets every component
//   cyclic-grading-has-generator   same gate + cyclic U: some simple is
//                                  faithful
TheoremReport run_theorem_suite(const FusionRing& r, int subring_rank_cap = 12);

// Shape recognition for rings where non-invertibles multiply into sums of
// invertibles.  nullopt when the ring is pointed or some such product has
// a non-invertible constituent; throws grading_error when the recognized
// shape then fails its own structural consequences (not expected).
struct GenTYProfile {
  GroupTable group;                    // invertibles
  std::vector<int> invertible_indices; // basis index per group element
  Subgroup gamma;                      // common stabilizer, within `group`
  std::vector<int> gamma_basis;        // same subgroup as basis indices
  int index = 1;                       // [G : gamma]
  std::string type_name;               // "(Z4, Z2)"
  Subgroup lambda_image;               // image of invertibles in U(C)
};
std::optional<GenTYProfile> classify_gen_ty(const FusionRing& r);

// For recognized rings with |gamma| = 2 and invertibles isomorphic to the
// grading group: search for a product decomposition into the rank-3
// Tambara-Yamagami ring and a pointed ring over a subgroup of half order.
struct GenTYDecomposition {
  bool hypotheses_met = false;
  std::string gate_detail;
  bool decomposed = false;
  std::vector<int> pointed_subgroup;            // group-element ids of the pointed factor
  std::optional<std::vector<int>> witness;      // basis bijection when found
};
GenTYDecomposition check_modular_genty_decomposition(const FusionRing& r);

// Symmetric nondegenerate bicharacter on (Z2)^m, rows as bitmasks.
struct TYBraidData {
  int m = 0;
  std::vector<std::uint32_t> rows;
};
TYBraidData make_ty_braid(int m, std::vector<std::uint32_t> rows);

// Kernel of g -> chi(g, g) = (-1)^{g . diag}; index 1 or 2 in (Z2)^m.
struct TransparentSubgroup {
  std::vector<std::uint32_t> basis;  // F2 basis vectors, ascending
  int index = 1;
};
TransparentSubgroup ty_transparent(const TYBraidData& d);

enum class ModularizationKind {
  kPointedFPdim4,            // index 2, m even
  kIsing,                    // index 2, m odd
  kSymmetricOrPointedFPdim2  // index 1: dichotomy left open
};

struct ModularizationPrediction {
  TransparentSubgroup transparent;
  bool integral = false;  // all dimensions integral, i.e. m even
  ModularizationKind kind = ModularizationKind::kIsing;
};

// Pure function of m and the diagonal of the bicharacter.
ModularizationPrediction ty_modularization_predict(const TYBraidData& d);

}  // namespace fusion
