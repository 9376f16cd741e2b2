#include "fusion/structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

#include "fusion/errors.hpp"

namespace fusion {

BasisSubset BasisSubset::empty_set(int rank) {
  BasisSubset s;
  s.rank = rank;
  s.words.assign((rank + 63) / 64, 0);
  return s;
}

BasisSubset BasisSubset::full_set(int rank) {
  BasisSubset s = empty_set(rank);
  for (int i = 0; i < rank; ++i) s.add(i);
  return s;
}

BasisSubset BasisSubset::of(int rank, std::span<const int> indices) {
  BasisSubset s = empty_set(rank);
  for (int i : indices) {
    if (i < 0 || i >= rank) throw param_error("basis index out of range");
    s.add(i);
  }
  return s;
}

int BasisSubset::count() const {
  int c = 0;
  for (std::uint64_t w : words) c += std::popcount(w);
  return c;
}

bool BasisSubset::is_subset_of(const BasisSubset& other) const {
  for (std::size_t w = 0; w < words.size(); ++w)
    if (words[w] & ~other.words[w]) return false;
  return true;
}

std::vector<int> BasisSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool is_closed_subring(const FusionRing& r, const BasisSubset& s) {
  if (!s.contains(0)) return false;
  std::vector<int> members = s.indices();
  for (int i : members)
    if (!s.contains(r.dual[i])) return false;
  for (int i : members)
    for (int j : members)
      for (int k = 0; k < r.rank; ++k)
        if (r.n(i, j, k) > 0 && !s.contains(k)) return false;
  return true;
}

namespace {

// One closure pass: add duals and product constituents of current members.
bool closure_pass(const FusionRing& r, BasisSubset& s) {
  bool grew = false;
  std::vector<int> members = s.indices();
  for (int i : members)
    if (!s.contains(r.dual[i])) {
      s.add(r.dual[i]);
      grew = true;
    }
  for (int i : members)
    for (int j : members)
      for (int k = 0; k < r.rank; ++k)
        if (r.n(i, j, k) > 0 && !s.contains(k)) {
          s.add(k);
          grew = true;
        }
  return grew;
}

BasisSubset close_subset(const FusionRing& r, BasisSubset s) {
  s.add(0);
  while (closure_pass(r, s)) {
  }
  return s;
}

}  // namespace

BasisSubset generated_subring(const FusionRing& r, std::span<const int> generators) {
  return close_subset(r, BasisSubset::of(r.rank, generators));
}

BasisSubset generated_subring(const FusionRing& r, const BasisSubset& generators) {
  return close_subset(r, generators);
}

bool is_invertible(const FusionRing& r, int i) {
  if (i < 0 || i >= r.rank) throw param_error("basis index out of range");
  return mult_matrix(r, i).is_permutation();
}

std::pair<std::vector<int>, GroupTable> invertibles(const FusionRing& r) {
  std::vector<int> idx;
  for (int i = 0; i < r.rank; ++i)
    if (is_invertible(r, i)) idx.push_back(i);
  int n = static_cast<int>(idx.size());
  std::vector<int> pos(r.rank, -1);
  for (int p = 0; p < n; ++p) pos[idx[p]] = p;
  std::vector<int> mul(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int prod = -1;
      for (int k = 0; k < r.rank; ++k)
        if (r.n(idx[a], idx[b], k) > 0) {
          prod = k;
          break;
        }
      if (prod < 0 || pos[prod] < 0)
        throw structural_error("invertibles", {idx[a], idx[b]},
                               "product of invertibles is not invertible");
      mul[static_cast<std::size_t>(a) * n + b] = pos[prod];
    }
  return {idx, make_group(n, std::move(mul))};
}

BasisSubset stabilizer(const FusionRing& r, int i) {
  if (i < 0 || i >= r.rank) throw param_error("basis index out of range");
  BasisSubset s = BasisSubset::empty_set(r.rank);
  int istar = r.dual[i];
  for (int g = 0; g < r.rank; ++g)
    if (is_invertible(r, g) && multiplicity(r, g, std::array{i, istar}) > 0) s.add(g);
  return s;
}

BasisSubset adjoint_of(const FusionRing& r, const BasisSubset& d) {
  BasisSubset gens = BasisSubset::empty_set(r.rank);
  for (int i : d.indices()) {
    int istar = r.dual[i];
    for (int k = 0; k < r.rank; ++k)
      if (r.n(i, istar, k) > 0) gens.add(k);
  }
  return close_subset(r, std::move(gens));
}

BasisSubset adjoint_subring(const FusionRing& r) {
  return adjoint_of(r, BasisSubset::full_set(r.rank));
}

BasisSubset commutator_subring(const FusionRing& r, const BasisSubset& d) {
  BasisSubset gens = BasisSubset::empty_set(r.rank);
  for (int y = 0; y < r.rank; ++y) {
    bool inside = true;
    int ystar = r.dual[y];
    for (int k = 0; k < r.rank && inside; ++k)
      if (r.n(y, ystar, k) > 0 && !d.contains(k)) inside = false;
    if (inside) gens.add(y);
  }
  return close_subset(r, std::move(gens));
}

CentralSeries upper_central_series(const FusionRing& r) {
  CentralSeries out;
  out.chain.push_back(BasisSubset::full_set(r.rank));
  while (true) {
    BasisSubset next = adjoint_of(r, out.chain.back());
    if (next == out.chain.back()) break;
    out.chain.push_back(std::move(next));
    if (out.chain.back().count() == 1) break;
  }
  if (out.chain.back().count() == 1)
    out.nilpotency_class = static_cast<int>(out.chain.size()) - 1;
  return out;
}

int order_of(const FusionRing& r, int i) {
  if (i < 0 || i >= r.rank) throw param_error("basis index out of range");
  // u_n = (M_i^T)^n e_0; u_{n-1}[i] is the unit multiplicity in x_i^n.
  // Coefficients are clamped: only positivity matters here.
  constexpr long long kClamp = 1'000'000'000'000'000LL;
  std::vector<long long> u(r.rank, 0), next(r.rank);
  u[0] = 1;
  for (int n = 1; n <= r.rank; ++n) {
    if (u[i] > 0) return n;
    std::fill(next.begin(), next.end(), 0);
    for (int k = 0; k < r.rank; ++k) {
      if (u[k] == 0) continue;
      for (int j = 0; j < r.rank; ++j) {
        int c = r.n(i, j, k);
        if (c) next[j] = std::min(kClamp, next[j] + c * u[k]);
      }
    }
    std::swap(u, next);
  }
  throw structural_error("order", {i},
                         "no power of x" + std::to_string(i) + " contains the unit within rank");
}

std::vector<int> faithful_simples(const FusionRing& r) {
  std::vector<int> out;
  BasisSubset full = BasisSubset::full_set(r.rank);
  for (int i = 0; i < r.rank; ++i) {
    int gens[1] = {i};
    if (generated_subring(r, gens) == full) out.push_back(i);
  }
  return out;
}

std::vector<BasisSubset> all_subrings(const FusionRing& r, int rank_cap) {
  if (r.rank > rank_cap)
    throw param_error("subring enumeration capped at rank " + std::to_string(rank_cap));
  if (r.rank > 63) throw param_error("subring enumeration limited to rank 63");

  const std::uint64_t total = std::uint64_t{1} << r.rank;
  // closure_of[mask] computed incrementally: strip the top set bit, reuse the
  // closure of the rest, then close once more with that bit added.
  std::vector<std::uint64_t> closure_of(total, 0);
  closure_of[0] = 1;  // closure of {} is {unit}
  std::unordered_set<std::uint64_t> seen;
  seen.insert(closure_of[0]);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    int top = 63 - std::countl_zero(mask);
    std::uint64_t base = closure_of[mask & ~(std::uint64_t{1} << top)];
    BasisSubset s = BasisSubset::empty_set(r.rank);
    s.words[0] = base | (std::uint64_t{1} << top);
    s = close_subset(r, std::move(s));
    closure_of[mask] = s.words[0];
    seen.insert(s.words[0]);
  }
  std::vector<std::uint64_t> masks(seen.begin(), seen.end());
  std::sort(masks.begin(), masks.end());
  std::vector<BasisSubset> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) {
    BasisSubset s = BasisSubset::empty_set(r.rank);
    s.words[0] = m;
    out.push_back(std::move(s));
  }
  return out;
}

std::pair<FusionRing, std::vector<int>> restrict_to(const FusionRing& r, const BasisSubset& s) {
  if (!is_closed_subring(r, s)) throw param_error("subset is not a closed subring");
  std::vector<int> embed = s.indices();
  int n = static_cast<int>(embed.size());
  std::vector<int> pos(r.rank, -1);
  for (int p = 0; p < n; ++p) pos[embed[p]] = p;

  std::vector<int> dual(n), tensor(static_cast<std::size_t>(n) * n * n);
  std::vector<std::string> labels;
  if (!r.labels.empty()) labels.resize(n);
  for (int p = 0; p < n; ++p) {
    dual[p] = pos[r.dual[embed[p]]];
    if (!labels.empty()) labels[p] = r.labels[embed[p]];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        tensor[(static_cast<std::size_t>(i) * n + j) * n + k] =
            r.n(embed[i], embed[j], embed[k]);
  return {make_ring(n, std::move(dual), std::move(tensor), std::move(labels)), embed};
}

Subgroup invertible_subgroup(const FusionRing& r, const BasisSubset& s) {
  auto [idx, table] = invertibles(r);
  std::vector<int> pos(r.rank, -1);
  for (std::size_t p = 0; p < idx.size(); ++p) pos[idx[p]] = static_cast<int>(p);
  std::vector<int> members;
  for (int i : s.indices()) {
    if (pos[i] < 0) throw param_error("subset contains a non-invertible index");
    members.push_back(pos[i]);
  }
  return make_subgroup(table, std::move(members));
}

}  // namespace fusion
