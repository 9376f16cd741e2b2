#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/ring.hpp"

namespace fusion {

// Subset of the basis as a bitset.
struct BasisSubset {
  int rank = 0;
  std::vector<std::uint64_t> words;

  static BasisSubset empty_set(int rank);
  static BasisSubset full_set(int rank);
  static BasisSubset of(int rank, std::span<const int> indices);

  void add(int i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  int count() const;
  bool is_subset_of(const BasisSubset& other) const;
  std::vector<int> indices() const;

  friend bool operator==(const BasisSubset&, const BasisSubset&) = default;
};

// Unit present, closed under dual and under product support.
bool is_closed_subring(const FusionRing& r, const BasisSubset& s);

// Smallest closed subring containing the generators: fixed-point closure
// under duals and product constituents.
BasisSubset generated_subring(const FusionRing& r, std::span<const int> generators);
BasisSubset generated_subring(const FusionRing& r, const BasisSubset& generators);

bool is_invertible(const FusionRing& r, int i);

// Basis indices whose multiplication matrix is a permutation, with their
// group table (positions follow ascending basis index, unit first).
std::pair<std::vector<int>, GroupTable> invertibles(const FusionRing& r);

// Invertibles g with N(g, x_i x_i*) > 0, equivalently g x_i = x_i.
BasisSubset stabilizer(const FusionRing& r, int i);

// Subring generated by all constituents of x_i x_i*.
BasisSubset adjoint_subring(const FusionRing& r);
// Same computation relative to a closed subset.
BasisSubset adjoint_of(const FusionRing& r, const BasisSubset& d);

// d^co: subring generated by { y : every constituent of y y* lies in d }.
BasisSubset commutator_subring(const FusionRing& r, const BasisSubset& d);

// Iterated adjoints until the chain stabilizes.  chain[0] is the full
// basis; nilpotency_class is the first n with chain[n] = {unit}, nullopt
// when the chain stabilizes above the unit.
struct CentralSeries {
  std::vector<BasisSubset> chain;
  std::optional<int> nilpotency_class;
};
CentralSeries upper_central_series(const FusionRing& r);

// Least n >= 1 with m(1, x_i^n) > 0, found by iterating e_unit under the
// transposed multiplication matrix.  Bounded by rank for valid rings;
// exceeding the bound raises structural_error.
int order_of(const FusionRing& r, int i);

// Simples whose generated subring is the whole basis.
std::vector<int> faithful_simples(const FusionRing& r);

// Every distinct closed subring, via closures of all 2^rank subsets with
// memoization.  Throws param_error when rank exceeds the cap.
std::vector<BasisSubset> all_subrings(const FusionRing& r, int rank_cap = 12);

// The closed subset as a fusion ring of its own, plus the embedding from
// new indices back to ambient ones.
std::pair<FusionRing, std::vector<int>> restrict_to(const FusionRing& r, const BasisSubset& s);

// Group table of a subset of the invertibles (must be closed).
Subgroup invertible_subgroup(const FusionRing& r, const BasisSubset& s);

}  // namespace fusion
