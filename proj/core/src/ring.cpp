#include "fusion/ring.hpp"

#include <algorithm>

#include "fusion/errors.hpp"

namespace fusion {

bool IntMatrix::is_permutation() const {
  if (rows != cols) return false;
  std::vector<int> row_ones(rows, 0), col_ones(cols, 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = at(r, c);
      if (v == 0) continue;
      if (v != 1) return false;
      ++row_ones[r];
      ++col_ones[c];
    }
  for (int r = 0; r < rows; ++r)
    if (row_ones[r] != 1 || col_ones[r] != 1) return false;
  return true;
}

std::string FusionRing::label(int i) const {
  if (i >= 0 && i < static_cast<int>(labels.size()) && !labels[i].empty()) return labels[i];
  return "x" + std::to_string(i);
}

bool FusionRing::is_commutative() const {
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      for (int k = 0; k < rank; ++k)
        if (n(i, j, k) != n(j, i, k)) return false;
  return true;
}

FusionRing make_ring(int rank, std::vector<int> dual, std::vector<int> tensor,
                     std::vector<std::string> labels) {
  if (rank < 1) throw param_error("ring rank must be positive");
  if (static_cast<int>(dual.size()) != rank) throw param_error("dual permutation size mismatch");
  if (tensor.size() != static_cast<std::size_t>(rank) * rank * rank)
    throw param_error("structure constant tensor size mismatch");
  for (int d : dual)
    if (d < 0 || d >= rank) throw param_error("dual index out of range");
  for (int v : tensor)
    if (v < 0) throw param_error("negative structure constant");
  if (!labels.empty() && static_cast<int>(labels.size()) != rank)
    throw param_error("label list size mismatch");
  FusionRing r;
  r.rank = rank;
  r.dual = std::move(dual);
  r.tensor = std::move(tensor);
  r.labels = std::move(labels);
  return r;
}

namespace {

ValidationReport fail(std::string identity, std::vector<int> where, std::string msg) {
  ValidationReport v;
  v.ok = false;
  v.identity = std::move(identity);
  v.where = std::move(where);
  v.message = std::move(msg);
  return v;
}

// Associativity via the equivalent matrix identity: with T_i(k,l) = N(i,k,l),
//   sum_m N(i,j,m) T_m  ==  T_j T_i   for all i, j.
// Both sides are accumulated from the sparse rows of T, so the cost is
// (number of nonzero constants) * rank^2 instead of rank^5.
ValidationReport check_associativity(const FusionRing& r) {
  const int n = r.rank;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<long long> lhs(nn), rhs(nn);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      for (int m = 0; m < n; ++m) {
        long long c = r.n(i, j, m);
        if (c == 0) continue;
        const int* tm = &r.tensor[static_cast<std::size_t>(m) * nn];
        for (std::size_t t = 0; t < nn; ++t) lhs[t] += c * tm[t];
      }
      for (int k = 0; k < n; ++k) {
        long long* out = &rhs[static_cast<std::size_t>(k) * n];
        for (int m = 0; m < n; ++m) {
          long long c = r.n(j, k, m);
          if (c == 0) continue;
          const int* ti = &r.tensor[(static_cast<std::size_t>(i) * n + m) * n];
          for (int l = 0; l < n; ++l) out[l] += c * ti[l];
        }
      }
      for (std::size_t t = 0; t < nn; ++t)
        if (lhs[t] != rhs[t]) {
          int k = static_cast<int>(t) / n, l = static_cast<int>(t) % n;
          return fail("associativity", {i, j, k, l},
                      "product sums disagree at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
                          ")");
        }
    }
  }
  return {};
}

}  // namespace

ValidationReport verify_ring(const FusionRing& r) {
  const int n = r.rank;
  if (n < 1) return fail("shape", {}, "empty basis");
  if (static_cast<int>(r.dual.size()) != n ||
      r.tensor.size() != static_cast<std::size_t>(n) * n * n)
    return fail("shape", {}, "tensor or dual size mismatch");

  for (int i = 0; i < n; ++i)
    if (r.dual[i] < 0 || r.dual[i] >= n || r.dual[r.dual[i]] != i)
      return fail("dual-involution", {i}, "dual permutation is not an involution at " +
                                              std::to_string(i));
  if (r.dual[0] != 0) return fail("dual-involution", {0}, "dual of the unit is not the unit");

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (r.n(0, j, k) != (j == k ? 1 : 0))
        return fail("unit", {0, j, k}, "left unit law fails at (0," + std::to_string(j) + "," +
                                           std::to_string(k) + ")");
      if (r.n(j, 0, k) != (j == k ? 1 : 0))
        return fail("unit", {j, 0, k}, "right unit law fails at (" + std::to_string(j) + ",0," +
                                           std::to_string(k) + ")");
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int expect = r.dual[i] == j ? 1 : 0;
      if (r.n(i, j, 0) != expect)
        return fail("duality", {i, j, 0}, "unit multiplicity in x" + std::to_string(i) + " x" +
                                              std::to_string(j) + " is not " +
                                              std::to_string(expect));
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int v = r.n(i, j, k);
        if (r.n(r.dual[i], k, j) != v || r.n(k, r.dual[j], i) != v)
          return fail("frobenius", {i, j, k},
                      "dual-pairing symmetry fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
      }

  return check_associativity(r);
}

FusionRing checked(FusionRing r) {
  ValidationReport v = verify_ring(r);
  if (!v.ok) throw structural_error(v.identity, v.where, v.message);
  return r;
}

IntMatrix mult_matrix(const FusionRing& r, int i) {
  if (i < 0 || i >= r.rank) throw param_error("basis index out of range");
  IntMatrix m;
  m.rows = m.cols = r.rank;
  m.a.resize(static_cast<std::size_t>(r.rank) * r.rank);
  for (int k = 0; k < r.rank; ++k)
    for (int j = 0; j < r.rank; ++j) m.at(k, j) = r.n(i, j, k);
  return m;
}

long long multiplicity(const FusionRing& r, int k, std::span<const int> word) {
  if (k < 0 || k >= r.rank) throw param_error("basis index out of range");
  if (word.empty()) return k == 0 ? 1 : 0;  // empty product is the unit
  for (int w : word)
    if (w < 0 || w >= r.rank) throw param_error("basis index out of range");

  // Right-associated expansion: v holds the coefficients of
  // x_{word[s]} (x_{word[s+1]} (...)).
  std::vector<long long> v(r.rank, 0), next(r.rank);
  v[word.back()] = 1;
  for (int s = static_cast<int>(word.size()) - 2; s >= 0; --s) {
    int i = word[s];
    std::fill(next.begin(), next.end(), 0);
    for (int j = 0; j < r.rank; ++j) {
      if (v[j] == 0) continue;
      for (int t = 0; t < r.rank; ++t) {
        int c = r.n(i, j, t);
        if (c) next[t] += c * v[j];
      }
    }
    std::swap(v, next);
  }
  return v[k];
}

}  // namespace fusion
