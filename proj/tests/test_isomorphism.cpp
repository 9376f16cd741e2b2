#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "fusion/errors.hpp"
#include "fusion/families.hpp"
#include "fusion/isomorphism.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

bool valid_map(const FusionRing& a, const FusionRing& b, const std::vector<int>& sigma) {
  if (sigma[0] != 0) return false;
  for (int i = 0; i < a.rank; ++i)
    if (sigma[a.dual[i]] != b.dual[sigma[i]]) return false;
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int k = 0; k < a.rank; ++k)
        if (a.n(i, j, k) != b.n(sigma[i], sigma[j], sigma[k])) return false;
  return true;
}

FusionRing relabel(const FusionRing& r, const std::vector<int>& perm) {
  int n = r.rank;
  std::vector<int> dual(n), tensor(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) dual[perm[i]] = perm[r.dual[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        tensor[(static_cast<std::size_t>(perm[i]) * n + perm[j]) * n + perm[k]] = r.n(i, j, k);
  return make_ring(n, std::move(dual), std::move(tensor));
}

}  // namespace

TEST_CASE("known isomorphism pairs") {
  CHECK(are_isomorphic(gen_verlinde(2), gen_ising()).has_value());
  CHECK(are_isomorphic(rep_corpus("D4"), rep_corpus("Q8")).has_value());
  CHECK(are_isomorphic(gen_moore_read(),
                       gen_gen_ty(cyclic_group(4), std::vector<int>{2}, 1))
            .has_value());
  CHECK(!are_isomorphic(gen_pointed(cyclic_group(4)), gen_pointed(abelian_group({2, 2}))));
  // invertible groups differ (Z4 vs Z2 x Z2)
  CHECK(!are_isomorphic(gen_ty(cyclic_group(4)), gen_ty(abelian_group({2, 2}))));
  // same rank and dimensions, but invertibles form Z4 vs Z2 x Z2
  FusionRing split = deligne_product(gen_ising(), gen_pointed(cyclic_group(2)));
  CHECK(!are_isomorphic(gen_moore_read(), split));
  CHECK(!oracle::exhaustive_iso(gen_moore_read(), split));
  CHECK(!are_isomorphic(gen_ising(), gen_yang_lee()));
}

TEST_CASE("returned maps really are isomorphisms") {
  auto s1 = are_isomorphic(gen_verlinde(2), gen_ising());
  REQUIRE(s1);
  CHECK(valid_map(gen_verlinde(2), gen_ising(), *s1));

  auto s2 = are_isomorphic(rep_corpus("D4"), rep_corpus("Q8"));
  REQUIRE(s2);
  CHECK(valid_map(rep_corpus("D4"), rep_corpus("Q8"), *s2));
}

TEST_CASE("search finds relabelings of larger rings") {
  std::mt19937 rng(20240817);
  for (const FusionRing& r : {gen_moore_read(), gen_ty(abelian_group({4, 2})),
                              deligne_product(gen_ising(), gen_verlinde(3)),
                              gen_pointed(abelian_group({8, 2}))}) {
    std::vector<int> perm(r.rank);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    FusionRing shuffled = relabel(r, perm);
    auto sigma = are_isomorphic(r, shuffled);
    REQUIRE(sigma);
    CHECK(valid_map(r, shuffled, *sigma));
  }
}

TEST_CASE("agreement with the exhaustive search on small corpus pairs") {
  std::vector<NamedRing> small;
  for (auto& e : standard_corpus())
    if (e.ring.rank <= 6) small.push_back(std::move(e));
  // subsample pairs to keep the permutation oracle affordable
  for (std::size_t x = 0; x < small.size(); x += 3)
    for (std::size_t y = x; y < small.size(); y += 4) {
      const FusionRing& a = small[x].ring;
      const FusionRing& b = small[y].ring;
      if (a.rank != b.rank) continue;
      CAPTURE(small[x].name);
      CAPTURE(small[y].name);
      auto fast = are_isomorphic(a, b);
      auto slow = oracle::exhaustive_iso(a, b);
      CHECK(fast.has_value() == slow.has_value());
      if (fast) CHECK(valid_map(a, b, *fast));
    }
}

TEST_CASE("self-isomorphism at moderate rank") {
  FusionRing big = gen_ty(cyclic_group(16));
  auto sigma = are_isomorphic(big, big);
  REQUIRE(sigma);
  CHECK(valid_map(big, big, *sigma));
}

TEST_CASE("budget exhaustion throws") {
  FusionRing r = gen_pointed(abelian_group({2, 2, 2, 2}));
  CHECK_THROWS_AS(are_isomorphic(r, r, {3}), budget_error);
}

TEST_CASE("rank mismatch is decided immediately") {
  CHECK(!are_isomorphic(gen_ising(), gen_verlinde(3)));
}
