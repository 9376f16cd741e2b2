#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fusion {

// Finite group as an explicit multiplication table.  Element 0 is the
// identity; `make_group` re-indexes arbitrary tables to keep that so.
struct GroupTable {
  int order = 1;
  std::vector<int> mul;      // order*order, mul[a*order + b] = a*b
  std::vector<int> inverse;  // a * inverse[a] = 0

  int at(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  int power(int a, long long e) const;
  int element_order(int a) const;
  std::vector<int> element_orders() const;
  long long exponent() const;
  bool is_abelian() const;
  bool is_cyclic() const;
};

// Validates the table (associativity, identity, inverses), finds the
// identity and permutes it to index 0.  Throws param_error on bad input.
GroupTable make_group(int order, std::vector<int> mul);

GroupTable trivial_group();
GroupTable cyclic_group(int n);

// Z_{f0} x Z_{f1} x ...; elements are little-endian mixed-radix tuples.
GroupTable abelian_group(const std::vector<int>& factors);
int abelian_index(const std::vector<int>& factors, const std::vector<int>& tuple);
std::vector<int> abelian_tuple(const std::vector<int>& factors, int index);
std::vector<std::string> abelian_labels(const std::vector<int>& factors);

GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable symmetric_group_3();

// A subgroup remembers its parent-element list (ascending, identity first)
// next to its own table.
struct Subgroup {
  std::vector<int> elements;
  GroupTable table;
};

std::vector<int> subgroup_closure(const GroupTable& g, std::vector<int> gens);
bool is_subgroup(const GroupTable& g, const std::vector<int>& elements);
bool is_normal_subgroup(const GroupTable& g, const std::vector<int>& elements);
Subgroup make_subgroup(const GroupTable& g, std::vector<int> elements);

// Full subgroup lattice, deduplicated, sorted by (size, elements).
std::vector<std::vector<int>> all_subgroups(const GroupTable& g);

// Invariant factor decomposition d_1 | d_2 | ... reported largest first;
// nullopt for nonabelian tables.
std::optional<std::vector<int>> abelian_invariant_factors(const GroupTable& g);

bool groups_isomorphic(const GroupTable& a, const GroupTable& b);

// "Z4", "Z4 x Z2", "S3", ... (descriptive fallback for unrecognized
// nonabelian tables).
std::string group_name(const GroupTable& g);

}  // namespace fusion
