#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fusion/errors.hpp"
#include "fusion/families.hpp"
#include "fusion/grading.hpp"
#include "fusion/structure.hpp"

using namespace fusion;

TEST_CASE("universal grading of the small standards") {
  UniversalGrading u = universal_grading(gen_ising());
  CHECK(u.grading.group.order == 2);
  CHECK(u.components[0] == std::vector<int>{0, 1});
  CHECK(u.components[1] == std::vector<int>{2});
  CHECK(u.grading.assign == std::vector<int>{0, 0, 1});
  CHECK(verify_grading(gen_ising(), u.grading));

  UniversalGrading mr = universal_grading(gen_moore_read());
  CHECK(mr.grading.group.order == 4);
  CHECK(mr.grading.group.is_cyclic());
  CHECK(mr.components[0] == std::vector<int>{0, 2});
  CHECK(mr.components[1] == std::vector<int>{1, 3});
  CHECK(mr.components[2] == std::vector<int>{4});
  CHECK(mr.components[3] == std::vector<int>{5});

  UniversalGrading yl = universal_grading(gen_yang_lee());
  CHECK(yl.grading.group.order == 1);
}

TEST_CASE("pointed rings recover their group") {
  for (const GroupTable& g :
       {cyclic_group(5), abelian_group({2, 2}), abelian_group({4, 2}), symmetric_group_3()}) {
    UniversalGrading u = universal_grading(gen_pointed(g));
    CHECK(groups_isomorphic(u.grading.group, g));
    for (const auto& comp : u.components) CHECK(comp.size() == 1);
  }
}

TEST_CASE("verlinde rings carry the parity grading") {
  for (int n = 1; n <= 8; ++n) {
    FusionRing r = gen_verlinde(n);
    UniversalGrading u = universal_grading(r);
    CHECK(u.grading.group.order == 2);
    for (int i = 0; i <= n; ++i) CHECK(u.grading.assign[i] == i % 2);

    GradingMap parity{cyclic_group(2), {}};
    parity.assign.resize(r.rank);
    for (int i = 0; i <= n; ++i) parity.assign[i] = i % 2;
    CHECK(verify_grading(r, parity));
    GroupHom phi = factor_through_universal(r, parity);
    CHECK(phi.is_isomorphism());
  }
}

TEST_CASE("near-group gradings collapse when kappa is positive") {
  for (int order = 1; order <= 3; ++order)
    for (int kappa = 1; kappa <= 2; ++kappa)
      CHECK(universal_grading(gen_near_group(cyclic_group(order), kappa)).grading.group.order == 1);
  for (int order = 1; order <= 8; ++order)
    CHECK(universal_grading(gen_ty(cyclic_group(order))).grading.group.order == 2);
}

TEST_CASE("verify_grading rejects what it should") {
  FusionRing ising = gen_ising();
  // unit off the identity component
  CHECK(!verify_grading(ising, {cyclic_group(2), {1, 0, 1}}));
  // product law broken: X (x) X hits both components
  CHECK(!verify_grading(ising, {cyclic_group(2), {0, 1, 1}}));
  // dual law broken on a pointed ring with an order-4 element
  GradingMap bad{cyclic_group(4), {0, 1, 2, 1}};
  CHECK(!verify_grading(gen_pointed(cyclic_group(4)), bad));
  // trivial grading always verifies
  CHECK(verify_grading(ising, {trivial_group(), {0, 0, 0}}));
  // arity mismatch
  CHECK(!verify_grading(ising, {cyclic_group(2), {0, 0}}));
}

TEST_CASE("gradings factor through the universal one") {
  FusionRing p4 = gen_pointed(cyclic_group(4));
  GradingMap coarse{cyclic_group(2), {0, 1, 0, 1}};
  GroupHom phi = factor_through_universal(p4, coarse);
  CHECK(phi.domain.order == 4);
  CHECK(phi.codomain.order == 2);
  CHECK(phi.is_surjective());
  CHECK(!phi.is_injective());
  for (int c = 0; c < phi.domain.order; ++c)
    for (int d = 0; d < phi.domain.order; ++d)
      CHECK(phi.map[phi.domain.at(c, d)] == phi.codomain.at(phi.map[c], phi.map[d]));

  GroupHom to_trivial = factor_through_universal(gen_ising(), {trivial_group(), {0, 0, 0}});
  CHECK(to_trivial.is_surjective());
  CHECK(!to_trivial.is_injective());

  // a map that is a grading but not this ring's grading cannot factor
  CHECK_THROWS_AS(factor_through_universal(p4, {cyclic_group(2), {0, 0, 1, 0}}), grading_error);
}

TEST_CASE("restrict_grading picks out the components a subset hits") {
  FusionRing mr = gen_moore_read();
  Subgroup pointed_part = restrict_grading(mr, BasisSubset::of(6, std::vector<int>{0, 1, 2, 3}));
  CHECK(pointed_part.elements == std::vector<int>{0, 1});
  Subgroup adjoint_only = restrict_grading(mr, BasisSubset::of(6, std::vector<int>{0, 2}));
  CHECK(adjoint_only.elements == std::vector<int>{0});
  Subgroup everything = restrict_grading(mr, BasisSubset::full_set(6));
  CHECK(everything.elements.size() == 4);
}

TEST_CASE("subring inclusion induces a map of grading groups") {
  FusionRing mr = gen_moore_read();
  GroupHom phi = subring_universal_map(mr, BasisSubset::of(6, std::vector<int>{0, 1, 2, 3}));
  // U(pointed Z4) = Z4 maps onto the index-2 subgroup of U(C) = Z4
  CHECK(phi.domain.order == 4);
  CHECK(phi.codomain.order == 4);
  CHECK(!phi.is_surjective());
  CHECK(!phi.is_injective());
  std::vector<int> image;
  for (int v : phi.map)
    if (std::find(image.begin(), image.end(), v) == image.end()) image.push_back(v);
  CHECK(image.size() == 2);

  GroupHom full = subring_universal_map(mr, BasisSubset::full_set(6));
  CHECK(full.is_isomorphism());

  GroupHom ising_even = subring_universal_map(gen_ising(), BasisSubset::of(3, std::vector<int>{0, 1}));
  CHECK(ising_even.domain.order == 2);  // U(pointed Z2)
  CHECK(ising_even.codomain.order == 2);
  CHECK(!ising_even.is_surjective());   // lands in the identity component
}

TEST_CASE("group profiles") {
  GroupProfile z4 = group_profile(cyclic_group(4));
  CHECK(z4.order == 4);
  CHECK(z4.exponent == 4);
  CHECK(z4.is_cyclic);
  CHECK(!z4.is_elementary_abelian_2);

  GroupProfile klein = group_profile(abelian_group({2, 2}));
  CHECK(!klein.is_cyclic);
  CHECK(klein.is_elementary_abelian_2);

  GroupProfile one = group_profile(trivial_group());
  CHECK(one.is_cyclic);
  CHECK(one.is_elementary_abelian_2);
  CHECK(one.exponent == 1);
}

TEST_CASE("universal grading is a verified grading across the corpus") {
  for (const auto& [name, r] : standard_corpus()) {
    CAPTURE(name);
    UniversalGrading u = universal_grading(r);
    CHECK(verify_grading(r, u.grading));
    // components partition the basis
    int total = 0;
    for (const auto& c : u.components) total += static_cast<int>(c.size());
    CHECK(total == r.rank);
    // identity component is the adjoint subring
    CHECK(u.components[0] == adjoint_subring(r).indices());
    // duals invert the grade
    for (int i = 0; i < r.rank; ++i)
      CHECK(u.grading.assign[r.dual[i]] == u.grading.group.inverse[u.grading.assign[i]]);
  }
}
