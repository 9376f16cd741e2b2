#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fusion/errors.hpp"
#include "fusion/group.hpp"

using namespace fusion;

namespace {

// 0..3 = r^i, 4..7 = s r^(i-4); rs = sr^-1.
GroupTable dihedral_8() {
  auto mod4 = [](int x) { return ((x % 4) + 4) % 4; };
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int i = a & 3, j = b & 3, v;
      if (a < 4 && b < 4) v = mod4(i + j);
      else if (a < 4) v = 4 + mod4(j - i);
      else if (b < 4) v = 4 + mod4(i + j);
      else v = mod4(j - i);
      mul[a * 8 + b] = v;
    }
  return make_group(8, std::move(mul));
}

// 0,1 = +-1, 2,3 = +-i, 4,5 = +-j, 6,7 = +-k.
GroupTable quaternion_8() {
  // base products: (b1, b2) -> base, with sign in the parallel table
  static const int base[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sign = (a & 1) ^ (b & 1) ^ neg[a >> 1][b >> 1];
      mul[a * 8 + b] = 2 * base[a >> 1][b >> 1] + sign;
    }
  return make_group(8, std::move(mul));
}

}  // namespace

TEST_CASE("cyclic group basics") {
  GroupTable g = cyclic_group(6);
  CHECK(g.order == 6);
  CHECK(g.is_abelian());
  CHECK(g.is_cyclic());
  CHECK(g.exponent() == 6);
  CHECK(g.element_order(1) == 6);
  CHECK(g.element_order(2) == 3);
  CHECK(g.element_order(3) == 2);
  CHECK(g.at(4, 5) == 3);
  CHECK(g.power(1, 100) == 100 % 6);
  CHECK(g.power(5, -1) == 1);
  for (int a = 0; a < 6; ++a) CHECK(g.at(a, g.inverse[a]) == 0);
}

TEST_CASE("make_group moves the identity to index 0") {
  // Z3 written with the identity at index 2.
  int id[3] = {2, 0, 1};  // relabeling old->new applied to the plain Z3 table
  std::vector<int> mul(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) mul[id[a] * 3 + id[b]] = id[(a + b) % 3];
  GroupTable g = make_group(3, std::move(mul));
  CHECK(g.at(0, 0) == 0);
  CHECK(g.element_order(1) == 3);
  CHECK(g.element_order(2) == 3);
  CHECK(groups_isomorphic(g, cyclic_group(3)));
}

TEST_CASE("make_group rejects non-groups") {
  CHECK_THROWS_AS(make_group(2, {0, 1, 1, 1}), param_error);        // 1 not invertible
  CHECK_THROWS_AS(make_group(2, {1, 1, 1, 1}), param_error);        // no identity
  CHECK_THROWS_AS(make_group(3, {0, 1, 2, 1, 2, 0, 2, 1, 0}), param_error);  // not associative
  CHECK_THROWS_AS(make_group(2, {0, 1, 1}), param_error);           // wrong size
  CHECK_THROWS_AS(make_group(2, {0, 1, 1, 2}), param_error);        // out of range
}

TEST_CASE("abelian groups and indexing") {
  GroupTable g = abelian_group({4, 2});
  CHECK(g.order == 8);
  CHECK(g.is_abelian());
  CHECK(!g.is_cyclic());
  CHECK(g.exponent() == 4);
  CHECK(abelian_index({4, 2}, {3, 1}) == 7);
  CHECK(abelian_tuple({4, 2}, 7) == std::vector<int>{3, 1});
  CHECK(abelian_index({4, 2}, abelian_tuple({4, 2}, 5)) == 5);
  CHECK(abelian_labels({4, 2}).size() == 8);
  CHECK(abelian_labels({4, 2})[0] == "e");

  CHECK(groups_isomorphic(abelian_group({4, 2}), abelian_group({2, 4})));
  CHECK(!groups_isomorphic(abelian_group({4, 2}), cyclic_group(8)));
  CHECK(!groups_isomorphic(abelian_group({4, 2}), abelian_group({2, 2, 2})));
  CHECK(groups_isomorphic(abelian_group({6}), abelian_group({2, 3})));
  CHECK(abelian_group({}).order == 1);
}

TEST_CASE("invariant factors") {
  CHECK(abelian_invariant_factors(cyclic_group(6)) == std::vector<int>{6});
  CHECK(abelian_invariant_factors(abelian_group({2, 3})) == std::vector<int>{6});
  CHECK(abelian_invariant_factors(abelian_group({2, 2})) == std::vector<int>{2, 2});
  CHECK(abelian_invariant_factors(abelian_group({4, 2, 2})) == std::vector<int>{4, 2, 2});
  CHECK(abelian_invariant_factors(abelian_group({8, 3, 2})) == std::vector<int>{24, 2});
  CHECK(abelian_invariant_factors(trivial_group()) == std::vector<int>{});
  CHECK(!abelian_invariant_factors(symmetric_group_3()));
}

TEST_CASE("symmetric group on three letters") {
  GroupTable s3 = symmetric_group_3();
  CHECK(s3.order == 6);
  CHECK(!s3.is_abelian());
  CHECK(s3.exponent() == 6);
  std::vector<int> orders = s3.element_orders();
  CHECK(std::count(orders.begin(), orders.end(), 2) == 3);
  CHECK(std::count(orders.begin(), orders.end(), 3) == 2);
  CHECK(group_name(s3) == "S3");
  CHECK(!groups_isomorphic(s3, cyclic_group(6)));
  CHECK(groups_isomorphic(s3, s3));

  // trivial, three Z2, one Z3, S3 itself
  CHECK(all_subgroups(s3).size() == 6);
}

TEST_CASE("subgroups") {
  GroupTable s3 = symmetric_group_3();
  std::vector<int> rot = subgroup_closure(s3, {1});  // an order-3 element or its friend
  // closure of any single element is cyclic of its order
  CHECK(rot.size() == static_cast<std::size_t>(s3.element_order(1)));
  CHECK(is_subgroup(s3, rot));

  bool found_nonnormal = false, found_normal_z3 = false;
  for (const auto& h : all_subgroups(s3)) {
    if (h.size() == 2 && !is_normal_subgroup(s3, h)) found_nonnormal = true;
    if (h.size() == 3 && is_normal_subgroup(s3, h)) found_normal_z3 = true;
  }
  CHECK(found_nonnormal);
  CHECK(found_normal_z3);

  Subgroup sub = make_subgroup(s3, subgroup_closure(s3, {1}));
  CHECK(sub.table.order == static_cast<int>(sub.elements.size()));
  CHECK(sub.elements[0] == 0);
  // id + two transpositions is not closed
  CHECK_THROWS_AS(make_subgroup(s3, {0, 1, 2}), param_error);
}

TEST_CASE("subgroup lattice of elementary abelian groups") {
  // (Z2)^3 has 1 + 7 + 7 + 1 = 16 subgroups.
  CHECK(all_subgroups(abelian_group({2, 2, 2})).size() == 16);
  // Z12 subgroups = divisors of 12.
  CHECK(all_subgroups(cyclic_group(12)).size() == 6);
}

TEST_CASE("group names split D4 from Q8") {
  GroupTable d4 = dihedral_8(), q8 = quaternion_8();
  CHECK(!d4.is_abelian());
  CHECK(!q8.is_abelian());
  CHECK(group_name(d4) == "D4");
  CHECK(group_name(q8) == "Q8");
  CHECK(!groups_isomorphic(d4, q8));
  CHECK(groups_isomorphic(d4, d4));
  CHECK(group_name(cyclic_group(4)) == "Z4");
  CHECK(group_name(abelian_group({2, 2})) == "Z2 x Z2");
  CHECK(group_name(trivial_group()) == "Z1");
}

TEST_CASE("direct products") {
  GroupTable g = direct_product(cyclic_group(3), symmetric_group_3());
  CHECK(g.order == 18);
  CHECK(!g.is_abelian());
  CHECK(g.exponent() == 6);
}
