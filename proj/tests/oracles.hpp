// Slow reference implementations the fast library code is tested against.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "fusion/ring.hpp"

namespace oracle {

// Every subset containing the unit that is literally closed under dual and
// product support.  Exponential; keep rank small.
inline std::vector<std::vector<int>> closed_subsets(const fusion::FusionRing& r) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r.rank); mask += 2) {
    bool ok = true;
    for (int i = 0; i < r.rank && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      ok = (mask >> r.dual[i]) & 1;
      for (int j = 0; j < r.rank && ok; ++j) {
        if (!((mask >> j) & 1)) continue;
        for (int k = 0; k < r.rank && ok; ++k)
          if (r.n(i, j, k) > 0) ok = (mask >> k) & 1;
      }
    }
    if (!ok) continue;
    std::vector<int> idx;
    for (int i = 0; i < r.rank; ++i)
      if ((mask >> i) & 1) idx.push_back(i);
    out.push_back(std::move(idx));
  }
  return out;
}

// Perron vector of the strictly positive total matrix T = sum_i M_i,
// normalized to 1 at the unit.  T being positive makes plain power
// iteration converge; the result is the common dimension character, an
// independent path to the per-object dimensions.
inline std::vector<double> perron_dims(const fusion::FusionRing& r, int sweeps = 400) {
  int n = r.rank;
  std::vector<double> t(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(k) * n + j] += r.n(i, j, k);
  std::vector<double> x(n, 1.0), y(n);
  for (int s = 0; s < sweeps; ++s) {
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += t[static_cast<std::size_t>(k) * n + j] * x[j];
      y[k] = acc;
    }
    double norm = *std::max_element(y.begin(), y.end());
    for (int k = 0; k < n; ++k) x[k] = y[k] / norm;
  }
  std::vector<double> dims(n);
  for (int k = 0; k < n; ++k) dims[k] = x[k] / x[0];
  return dims;
}

// Brute-force isomorphism: try every basis bijection fixing the unit.
inline std::optional<std::vector<int>> exhaustive_iso(const fusion::FusionRing& a,
                                                      const fusion::FusionRing& b) {
  if (a.rank != b.rank) return std::nullopt;
  std::vector<int> perm(a.rank);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.rank && ok; ++i) ok = perm[a.dual[i]] == b.dual[perm[i]];
    for (int i = 0; i < a.rank && ok; ++i)
      for (int j = 0; j < a.rank && ok; ++j)
        for (int k = 0; k < a.rank && ok; ++k)
          ok = a.n(i, j, k) == b.n(perm[i], perm[j], perm[k]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

// Quantum dimension of the level-n sl2 object i via the sine formula.
inline double verlinde_dim(int n, int i) {
  const double pi = std::acos(-1.0);
  return std::sin((i + 1) * pi / (n + 2)) / std::sin(pi / (n + 2));
}

// Word product evaluated left-associated, as a full coefficient vector.
inline std::vector<long long> left_product(const fusion::FusionRing& r,
                                           const std::vector<int>& word) {
  std::vector<long long> acc(r.rank, 0);
  acc[0] = 1;
  for (int w : word) {
    std::vector<long long> next(r.rank, 0);
    for (int j = 0; j < r.rank; ++j) {
      if (acc[j] == 0) continue;
      for (int k = 0; k < r.rank; ++k)
        if (int c = r.n(j, w, k)) next[k] += acc[j] * c;
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace oracle
