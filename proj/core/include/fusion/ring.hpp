#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fusion {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<int> a;

  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool is_permutation() const;
};

// Fusion ring on a distinguished basis x_0, ..., x_{rank-1}: nonnegative
// integer structure constants N(i,j,k) with x_i x_j = sum_k N(i,j,k) x_k,
// unit x_0, duality involution i -> dual[i].  Treated as immutable once
// verified.
struct FusionRing {
  int rank = 0;
  std::vector<int> dual;
  std::vector<int> tensor;  // rank^3, layout (i*rank + j)*rank + k
  std::vector<std::string> labels;                         // optional, display only
  std::vector<std::pair<std::string, std::string>> meta;   // carried through io

  int n(int i, int j, int k) const {
    return tensor[(static_cast<std::size_t>(i) * rank + j) * rank + k];
  }
  std::string label(int i) const;
  bool is_commutative() const;
};

// Shape-checks the pieces (sizes, value ranges); no axiom checking.
FusionRing make_ring(int rank, std::vector<int> dual, std::vector<int> tensor,
                     std::vector<std::string> labels = {});

struct ValidationReport {
  bool ok = true;
  std::string identity;    // first violated axiom: "dual-involution", "unit",
                           // "duality", "frobenius", "associativity"
  std::vector<int> where;  // witness index tuple
  std::string message;
};

// Checks the defining identities in a fixed order and reports the first
// violation.  Associativity is the full sum identity
//   sum_m N(i,j,m) N(m,k,l) = sum_m N(j,k,m) N(i,m,l).
ValidationReport verify_ring(const FusionRing& r);

// verify_ring or throw structural_error.  Family generators and the parser
// funnel through this.
FusionRing checked(FusionRing r);

// Left multiplication by x_i: M[k][j] = N(i,j,k), so M applied to a
// multiplicity vector is multiplication by x_i.
IntMatrix mult_matrix(const FusionRing& r, int i);

// Coefficient of x_k in x_{w0} x_{w1} ... (exact integer arithmetic).
// The empty word is the empty product, i.e. the unit.
long long multiplicity(const FusionRing& r, int k, std::span<const int> word);

}  // namespace fusion
