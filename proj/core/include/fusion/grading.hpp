#pragma once

#include <vector>

#include "fusion/group.hpp"
#include "fusion/ring.hpp"
#include "fusion/structure.hpp"

namespace fusion {

// Assignment of a group element to every basis index.
struct GradingMap {
  GroupTable group;
  std::vector<int> assign;  // rank entries, values in [0, group.order)
};

// The finest grading: components are the orbits of the basis under left
// multiplication by the adjoint subring, the group law is induced by the
// ring product.  Component ids follow the minimal basis index in each
// component, so the identity component (the adjoint subring) is 0.
struct UniversalGrading {
  GradingMap grading;
  std::vector<std::vector<int>> components;  // per group element, sorted
};

// Throws grading_error if the induced component product is not well
// defined or fails the group laws (not expected on verified rings).
UniversalGrading universal_grading(const FusionRing& r);

// assign(unit) = e, assign(dual i) = assign(i)^-1, and N(i,j,k) > 0
// implies assign(k) = assign(i) assign(j).
bool verify_grading(const FusionRing& r, const GradingMap& g);

struct GroupHom {
  GroupTable domain, codomain;
  std::vector<int> map;  // domain element -> codomain element

  bool is_surjective() const;
  bool is_injective() const;
  bool is_isomorphism() const { return is_surjective() && is_injective(); }
};

// The unique phi with g = phi . lambda_universal for a verified grading g.
// Throws grading_error when g fails verify_grading or no factorization
// exists.
GroupHom factor_through_universal(const FusionRing& r, const GradingMap& g);

// Subgroup of the universal grading group hit by a closed subset.
Subgroup restrict_grading(const FusionRing& r, const BasisSubset& d);

// phi_D : U(D) -> U(C) induced by inclusion of the closed subset d;
// surjects onto restrict_grading(r, d).
GroupHom subring_universal_map(const FusionRing& r, const BasisSubset& d);

struct GroupProfile {
  int order = 1;
  long long exponent = 1;
  bool is_cyclic = true;
  bool is_elementary_abelian_2 = true;
};
GroupProfile group_profile(const GroupTable& g);

}  // namespace fusion
