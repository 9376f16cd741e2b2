#include "fusion/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "fusion/errors.hpp"
#include "fusion/fpdim.hpp"
#include "fusion/structure.hpp"

namespace fusion {

namespace {

// Per-object invariant fingerprint; equal fingerprints are a necessary
// condition for sigma(i) = j.
struct Fingerprint {
  std::int64_t dim_q;  // FP dimension quantized at 1e-6
  int order;
  bool self_dual;
  bool invertible;
  long long mass;  // sum_jk N(i, j, k)

  auto operator<=>(const Fingerprint&) const = default;
};

std::vector<Fingerprint> fingerprints(const FusionRing& r) {
  std::vector<double> dims = fpdims(r);
  std::vector<Fingerprint> out(r.rank);
  for (int i = 0; i < r.rank; ++i) {
    long long mass = 0;
    for (int j = 0; j < r.rank; ++j)
      for (int k = 0; k < r.rank; ++k) mass += r.n(i, j, k);
    out[i] = {static_cast<std::int64_t>(std::llround(dims[i] * 1e6)), order_of(r, i),
              r.dual[i] == i, is_invertible(r, i), mass};
  }
  return out;
}

struct Search {
  const FusionRing& a;
  const FusionRing& b;
  const std::vector<Fingerprint>& fa;
  const std::vector<Fingerprint>& fb;
  long long budget;
  std::vector<int> sigma;         // a-index -> b-index, -1 unset
  std::vector<char> used;         // b-index taken
  std::vector<int> order;         // assignment order over a-indices

  bool consistent(int i) const {
    // Check every triple among assigned indices that involves i.
    for (int j = 0; j < a.rank; ++j) {
      if (sigma[j] < 0) continue;
      for (int k = 0; k < a.rank; ++k) {
        if (sigma[k] < 0) continue;
        if (a.n(i, j, k) != b.n(sigma[i], sigma[j], sigma[k])) return false;
        if (a.n(j, i, k) != b.n(sigma[j], sigma[i], sigma[k])) return false;
        if (a.n(j, k, i) != b.n(sigma[j], sigma[k], sigma[i])) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order.size()) return true;
    if (--budget < 0) throw budget_error("isomorphism search budget exhausted");
    int i = order[pos];
    if (sigma[i] >= 0) return extend(pos + 1);  // forced earlier by duality
    for (int cand = 0; cand < b.rank; ++cand) {
      if (used[cand] || fa[i] != fb[cand]) continue;
      int istar = a.dual[i], cstar = b.dual[cand];
      if (sigma[istar] >= 0 && sigma[istar] != cstar) continue;
      if (sigma[istar] < 0 && used[cstar] && cstar != cand) continue;
      sigma[i] = cand;
      used[cand] = 1;
      bool forced = sigma[istar] < 0 && istar != i;
      if (forced) {
        sigma[istar] = cstar;
        used[cstar] = 1;
      }
      if (consistent(i) && (!forced || consistent(istar)) && extend(pos + 1)) return true;
      if (forced) {
        sigma[istar] = -1;
        used[cstar] = 0;
      }
      sigma[i] = -1;
      used[cand] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FusionRing& a, const FusionRing& b,
                                               const IsoOptions& opts) {
  if (a.rank != b.rank) return std::nullopt;
  std::vector<Fingerprint> fa = fingerprints(a), fb = fingerprints(b);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  if (fa[0] != fb[0]) return std::nullopt;  // units must match

  // Assign rarest fingerprint classes first; unit is pinned up front.
  std::vector<int> class_size(a.rank, 0);
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j) class_size[i] += fa[i] == fa[j];
  std::vector<int> order;
  for (int i = 1; i < a.rank; ++i) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (class_size[x] != class_size[y]) return class_size[x] < class_size[y];
    return x < y;
  });

  Search s{a, b, fa, fb, opts.node_budget,
           std::vector<int>(a.rank, -1), std::vector<char>(a.rank, 0), std::move(order)};
  s.sigma[0] = 0;
  s.used[0] = 1;
  if (s.extend(0)) return s.sigma;
  return std::nullopt;
}

}  // namespace fusion
