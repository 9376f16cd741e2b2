#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "fusion/errors.hpp"
#include "fusion/families.hpp"
#include "fusion/fpdim.hpp"
#include "fusion/isomorphism.hpp"
#include "fusion/structure.hpp"

using namespace fusion;

TEST_CASE("pointed rings are the group ring") {
  GroupTable g = abelian_group({4, 2});
  FusionRing r = gen_pointed(g, abelian_labels({4, 2}));
  CHECK(r.rank == 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int k = 0; k < 8; ++k) CHECK(r.n(a, b, k) == (k == g.at(a, b) ? 1 : 0));
  CHECK(r.dual == g.inverse);
  CHECK(r.label(0) == "e");

  FusionRing s3 = gen_pointed(symmetric_group_3());
  CHECK(!s3.is_commutative());
}

TEST_CASE("tambara-yamagami shape") {
  FusionRing r = gen_ty(cyclic_group(3));
  CHECK(r.rank == 4);
  CHECK(r.dual[3] == 3);
  CHECK(r.label(3) == "X");
  for (int a = 0; a < 3; ++a) {
    CHECK(r.n(a, 3, 3) == 1);
    CHECK(r.n(3, a, 3) == 1);
    CHECK(r.n(3, 3, a) == 1);
  }
  CHECK(r.n(3, 3, 3) == 0);
}

TEST_CASE("near-group multiplicities") {
  FusionRing r = gen_near_group(cyclic_group(2), 3);
  CHECK(r.n(2, 2, 2) == 3);
  CHECK(r.n(2, 2, 0) == 1);
  CHECK(r.n(2, 2, 1) == 1);
  CHECK_THROWS_AS(gen_near_group(cyclic_group(2), -1), param_error);

  FusionRing yl = gen_yang_lee();
  CHECK(yl.rank == 2);
  CHECK(yl.n(1, 1, 0) == 1);
  CHECK(yl.n(1, 1, 1) == 1);

  // kappa > 0 over a nonabelian group still closes associatively
  CHECK(verify_ring(gen_near_group(symmetric_group_3(), 2)).ok);
}

TEST_CASE("verlinde tables") {
  FusionRing v3 = gen_verlinde(3);
  CHECK(v3.rank == 4);
  CHECK(v3.n(1, 1, 0) == 1);
  CHECK(v3.n(1, 1, 2) == 1);
  CHECK(v3.n(1, 1, 1) == 0);  // parity
  CHECK(v3.n(1, 2, 3) == 1);
  CHECK(v3.n(2, 2, 2) == 1);  // truncation keeps 2 but kills 4
  CHECK(v3.n(3, 3, 0) == 1);
  CHECK(v3.n(3, 3, 2) == 0);  // 2n - i - j = 0
  for (int i = 0; i < 4; ++i) CHECK(v3.dual[i] == i);

  CHECK(gen_verlinde(0).rank == 1);
}

TEST_CASE("moore-read table") {
  FusionRing mr = gen_moore_read();
  CHECK(mr.rank == 6);
  CHECK(mr.labels == std::vector<std::string>{"e", "g", "g2", "g3", "X", "X'"});
  CHECK(mr.dual == std::vector<int>{0, 3, 2, 1, 5, 4});
  // X (x) X = g + g3
  CHECK(mr.n(4, 4, 1) == 1);
  CHECK(mr.n(4, 4, 3) == 1);
  CHECK(mr.n(4, 4, 0) == 0);
  // X (x) X' = e + g2
  CHECK(mr.n(4, 5, 0) == 1);
  CHECK(mr.n(4, 5, 2) == 1);
  // g X = X'
  CHECK(mr.n(1, 4, 5) == 1);
  CHECK(mr.n(2, 4, 4) == 1);
  CHECK(mr.is_commutative());
}

TEST_CASE("generalized TY constructions") {
  // full stabilizer reproduces plain TY
  FusionRing a = gen_gen_ty(cyclic_group(3), std::vector<int>{1}, 0);
  FusionRing b = gen_ty(cyclic_group(3));
  CHECK(a.tensor == b.tensor);
  CHECK(a.dual == b.dual);

  // moore-read is the (Z4, {0,2}, coset 1) instance
  FusionRing mr = gen_gen_ty(cyclic_group(4), std::vector<int>{2}, 1);
  CHECK(mr.tensor == gen_moore_read().tensor);

  // both representatives of the same coset give the same table
  FusionRing mr2 = gen_gen_ty(cyclic_group(4), std::vector<int>{2}, 3);
  CHECK(mr2.tensor == mr.tensor);

  // trivial stabilizer degenerates to a pointed ring
  FusionRing p = gen_gen_ty(abelian_group({2, 2}), std::span<const int>{}, 0);
  CHECK(p.rank == 8);
  for (int i = 0; i < p.rank; ++i) CHECK(is_invertible(p, i));

  CHECK_THROWS_AS(gen_gen_ty(symmetric_group_3(), std::vector<int>{1}, 0), param_error);
  CHECK_THROWS_AS(gen_gen_ty(cyclic_group(4), std::vector<int>{2}, 7), param_error);
}

TEST_CASE("character ring corpus") {
  FusionRing s3 = rep_corpus("S3");
  CHECK(s3.rank == 3);
  CHECK(s3.n(2, 2, 0) == 1);
  CHECK(s3.n(2, 2, 1) == 1);
  CHECK(s3.n(2, 2, 2) == 1);
  std::vector<double> d = fpdims(s3);
  CHECK(d[2] == doctest::Approx(2.0).epsilon(1e-9));

  // D4 and Q8 share a character table
  CHECK(rep_corpus("D4").tensor == rep_corpus("Q8").tensor);

  FusionRing a4 = rep_corpus("A4");
  CHECK(a4.dual == std::vector<int>{0, 2, 1, 3});
  CHECK(a4.n(3, 3, 3) == 2);
  CHECK(a4.n(1, 2, 0) == 1);
  CHECK(fpdims(a4)[3] == doctest::Approx(3.0).epsilon(1e-9));

  CHECK_THROWS_AS(rep_corpus("S4"), param_error);
}

TEST_CASE("products multiply ranks and dimensions") {
  FusionRing p = deligne_product(gen_ising(), gen_verlinde(3));
  CHECK(p.rank == 12);
  CHECK(fpdim_ring(p) ==
        doctest::Approx(fpdim_ring(gen_ising()) * fpdim_ring(gen_verlinde(3))).epsilon(1e-6));
  CHECK(p.label(0) == "e.X0");

  // product against the trivial ring changes nothing
  FusionRing same = deligne_product(gen_ising(), gen_pointed(trivial_group()));
  CHECK(are_isomorphic(gen_ising(), same).has_value());
}

TEST_CASE("corpus composition") {
  std::vector<NamedRing> corpus = standard_corpus();
  CHECK(corpus.size() >= 60);
  std::set<std::string> names;
  for (const auto& e : corpus) {
    CHECK(e.ring.rank >= 1);
    CHECK(e.ring.rank <= 33);
    names.insert(e.name);
  }
  CHECK(names.size() == corpus.size());  // no duplicate names
  for (const char* expected :
       {"pointed(Z16)", "pointed(S3)", "ty(Z8)", "ty(Z2xZ2xZ2xZ2)", "yang_lee", "verlinde(8)",
        "moore_read", "rep(Q8)", "genty(Z4,{0.2},1)", "prod(ising,moore_read)"})
    CHECK(names.count(expected) == 1);
}
