#include "fusion/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

std::vector<std::string> default_group_labels(int order) {
  std::vector<std::string> out = {"e"};
  for (int i = 1; i < order; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

void set_meta(FusionRing& r, std::string family, std::string params = "") {
  r.meta.emplace_back("family", std::move(family));
  if (!params.empty()) r.meta.emplace_back("params", std::move(params));
}

}  // namespace

FusionRing gen_pointed(const GroupTable& g, std::vector<std::string> labels) {
  int n = g.order;
  std::vector<int> dual = g.inverse;
  std::vector<int> tensor(static_cast<std::size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      tensor[(static_cast<std::size_t>(a) * n + b) * n + g.at(a, b)] = 1;
  if (labels.empty()) labels = default_group_labels(n);
  FusionRing r = make_ring(n, std::move(dual), std::move(tensor), std::move(labels));
  set_meta(r, "pointed", "order " + std::to_string(n));
  return checked(std::move(r));
}

FusionRing gen_near_group(const GroupTable& g, int kappa, std::vector<std::string> labels) {
  if (kappa < 0) throw param_error("kappa must be nonnegative");
  int m = g.order, n = m + 1, x = m;
  std::vector<int> dual(n);
  for (int a = 0; a < m; ++a) dual[a] = g.inverse[a];
  dual[x] = x;
  std::vector<int> tensor(static_cast<std::size_t>(n) * n * n, 0);
  auto at = [&](int i, int j, int k) -> int& {
    return tensor[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) at(a, b, g.at(a, b)) = 1;
  for (int a = 0; a < m; ++a) {
    at(a, x, x) = 1;
    at(x, a, x) = 1;
  }
  for (int a = 0; a < m; ++a) at(x, x, a) = 1;
  at(x, x, x) = kappa;
  if (labels.empty()) {
    labels = default_group_labels(m);
    labels.push_back("X");
  }
  FusionRing r = make_ring(n, std::move(dual), std::move(tensor), std::move(labels));
  set_meta(r, kappa == 0 ? "ty" : "near_group",
           "order " + std::to_string(m) + (kappa ? " kappa " + std::to_string(kappa) : ""));
  return checked(std::move(r));
}

FusionRing gen_ty(const GroupTable& g, std::vector<std::string> labels) {
  return gen_near_group(g, 0, std::move(labels));
}

FusionRing gen_verlinde(int n) {
  if (n < 0) throw param_error("verlinde level must be nonnegative");
  int r = n + 1;
  std::vector<int> dual(r);
  std::iota(dual.begin(), dual.end(), 0);
  std::vector<int> tensor(static_cast<std::size_t>(r) * r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int l = std::abs(i - j); l <= std::min(i + j, 2 * n - i - j); l += 2)
        tensor[(static_cast<std::size_t>(i) * r + j) * r + l] = 1;
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) labels.push_back("X" + std::to_string(i));
  FusionRing out = make_ring(r, std::move(dual), std::move(tensor), std::move(labels));
  set_meta(out, "verlinde", "level " + std::to_string(n));
  return checked(std::move(out));
}

FusionRing gen_moore_read() {
  GroupTable z4 = cyclic_group(4);
  std::vector<int> gamma = {0, 2};
  FusionRing r = gen_gen_ty(z4, gamma, 1, {"e", "g", "g2", "g3", "X", "X'"});
  r.meta.clear();
  set_meta(r, "moore_read");
  return r;
}

FusionRing gen_ising() {
  FusionRing r = gen_ty(cyclic_group(2), {"e", "a", "X"});
  r.meta.clear();
  set_meta(r, "ising");
  return r;
}

FusionRing gen_yang_lee() {
  FusionRing r = gen_near_group(trivial_group(), 1, {"e", "X"});
  r.meta.clear();
  set_meta(r, "yang_lee");
  return r;
}

FusionRing gen_gen_ty(const GroupTable& g, std::span<const int> gamma_generators,
                      int coset_rep, std::vector<std::string> labels) {
  if (!g.is_abelian()) throw param_error("generalized TY rings need an abelian group");
  if (coset_rep < 0 || coset_rep >= g.order) throw param_error("coset representative out of range");
  std::vector<int> gamma =
      subgroup_closure(g, std::vector<int>(gamma_generators.begin(), gamma_generators.end()));

  // Cosets of gamma, ordered by minimal element; coset_of[x] is the position.
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : gamma) coset_of[g.at(x, h)] = id;
  }
  int nc = static_cast<int>(reps.size());
  int m = g.order, n = m + nc;

  std::vector<int> dual(n);
  for (int a = 0; a < m; ++a) dual[a] = g.inverse[a];
  for (int s = 0; s < nc; ++s)
    dual[m + s] = m + coset_of[g.at(g.inverse[reps[s]], g.inverse[coset_rep])];

  std::vector<int> tensor(static_cast<std::size_t>(n) * n * n, 0);
  auto at = [&](int i, int j, int k) -> int& {
    return tensor[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) at(a, b, g.at(a, b)) = 1;
  for (int a = 0; a < m; ++a)
    for (int s = 0; s < nc; ++s) {
      int target = m + coset_of[g.at(a, reps[s])];
      at(a, m + s, target) = 1;
      at(m + s, a, target) = 1;
    }
  for (int s = 0; s < nc; ++s)
    for (int t = 0; t < nc; ++t) {
      int base = g.at(g.at(reps[s], reps[t]), coset_rep);
      for (int h : gamma) at(m + s, m + t, g.at(base, h)) = 1;
    }

  if (labels.empty()) {
    labels = default_group_labels(m);
    for (int s = 0; s < nc; ++s) labels.push_back("X" + std::to_string(reps[s]));
  }
  FusionRing r = make_ring(n, std::move(dual), std::move(tensor), std::move(labels));
  std::string params = "order " + std::to_string(m) + " gamma";
  for (int h : gamma) params += " " + std::to_string(h);
  params += " coset " + std::to_string(coset_rep);
  set_meta(r, "gen_ty", params);
  return checked(std::move(r));
}

FusionRing rep_corpus(const std::string& key) {
  auto build = [](int n, std::vector<int> dual, const std::vector<std::array<int, 4>>& entries,
                  std::vector<std::string> labels, const std::string& name) {
    std::vector<int> tensor(static_cast<std::size_t>(n) * n * n, 0);
    for (const auto& e : entries)
      tensor[(static_cast<std::size_t>(e[0]) * n + e[1]) * n + e[2]] = e[3];
    FusionRing r = make_ring(n, std::move(dual), std::move(tensor), std::move(labels));
    set_meta(r, "rep_corpus", name);
    return checked(std::move(r));
  };

  if (key == "S3") {
    // 1, sgn, V(2): sgn^2 = 1, sgn V = V, V^2 = 1 + sgn + V
    std::vector<std::array<int, 4>> e = {
        {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 1, 1}, {2, 0, 2, 1},
        {1, 1, 0, 1}, {1, 2, 2, 1}, {2, 1, 2, 1},
        {2, 2, 0, 1}, {2, 2, 1, 1}, {2, 2, 2, 1}};
    return build(3, {0, 1, 2}, e, {"1", "sgn", "V"}, "S3");
  }
  if (key == "D4" || key == "Q8") {
    // Four linear characters forming Z2 x Z2, one 2-dimensional V:
    // gV = V, V^2 = 1 + a + b + ab.  D4 and Q8 share this table.
    std::vector<std::array<int, 4>> e;
    auto klein = [](int a, int b) { return a ^ b; };
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) e.push_back({a, b, klein(a, b), 1});
    for (int a = 0; a < 4; ++a) {
      e.push_back({a, 4, 4, 1});
      e.push_back({4, a, 4, 1});
    }
    for (int a = 0; a < 4; ++a) e.push_back({4, 4, a, 1});
    return build(5, {0, 1, 2, 3, 4}, e, {"1", "a", "b", "ab", "V"}, key);
  }
  if (key == "A4") {
    // 1, w, w* (cube-root characters), T(3): w w = w*, w w* = 1, wT = T,
    // T^2 = 1 + w + w* + 2T.
    std::vector<std::array<int, 4>> e = {
        {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
        {1, 0, 1, 1}, {2, 0, 2, 1}, {3, 0, 3, 1},
        {1, 1, 2, 1}, {1, 2, 0, 1}, {2, 1, 0, 1}, {2, 2, 1, 1},
        {1, 3, 3, 1}, {3, 1, 3, 1}, {2, 3, 3, 1}, {3, 2, 3, 1},
        {3, 3, 0, 1}, {3, 3, 1, 1}, {3, 3, 2, 1}, {3, 3, 3, 2}};
    return build(4, {0, 2, 1, 3}, e, {"1", "w", "w*", "T"}, "A4");
  }
  throw param_error("unknown character ring key: " + key);
}

FusionRing deligne_product(const FusionRing& a, const FusionRing& b) {
  int n = a.rank * b.rank;
  auto id = [&](int i, int j) { return i * b.rank + j; };
  std::vector<int> dual(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < b.rank; ++j) {
      dual[id(i, j)] = id(a.dual[i], b.dual[j]);
      labels[id(i, j)] = a.label(i) + "." + b.label(j);
    }
  std::vector<int> tensor(static_cast<std::size_t>(n) * n * n, 0);
  for (int i1 = 0; i1 < a.rank; ++i1)
    for (int j1 = 0; j1 < b.rank; ++j1)
      for (int i2 = 0; i2 < a.rank; ++i2)
        for (int j2 = 0; j2 < b.rank; ++j2)
          for (int k1 = 0; k1 < a.rank; ++k1) {
            int c1 = a.n(i1, i2, k1);
            if (c1 == 0) continue;
            for (int k2 = 0; k2 < b.rank; ++k2) {
              int c2 = b.n(j1, j2, k2);
              if (c2)
                tensor[(static_cast<std::size_t>(id(i1, j1)) * n + id(i2, j2)) * n +
                       id(k1, k2)] = c1 * c2;
            }
          }
  FusionRing r = make_ring(n, std::move(dual), std::move(tensor), std::move(labels));
  set_meta(r, "product");
  return checked(std::move(r));
}

namespace {

std::string factors_name(const std::vector<int>& factors) {
  if (factors.empty()) return "Z1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(factors[i]);
  }
  return s;
}

const std::map<int, std::vector<std::vector<int>>>& abelian_groups_by_order() {
  static const std::map<int, std::vector<std::vector<int>>> table = {
      {1, {{1}}},
      {2, {{2}}},
      {3, {{3}}},
      {4, {{4}, {2, 2}}},
      {5, {{5}}},
      {6, {{6}}},
      {7, {{7}}},
      {8, {{8}, {4, 2}, {2, 2, 2}}},
      {9, {{9}, {3, 3}}},
      {10, {{10}}},
      {11, {{11}}},
      {12, {{12}, {6, 2}}},
      {13, {{13}}},
      {14, {{14}}},
      {15, {{15}}},
      {16, {{16}, {8, 2}, {4, 4}, {4, 2, 2}, {2, 2, 2, 2}}},
  };
  return table;
}

}  // namespace

std::vector<NamedRing> standard_corpus() {
  std::vector<NamedRing> out;
  auto add = [&](std::string name, FusionRing r) {
    out.push_back({std::move(name), std::move(r)});
  };

  for (const auto& [order, groups] : abelian_groups_by_order())
    for (const auto& f : groups)
      add("pointed(" + factors_name(f) + ")", gen_pointed(abelian_group(f), abelian_labels(f)));
  add("pointed(S3)", gen_pointed(symmetric_group_3(), {"e", "r", "r2", "s", "sr", "sr2"}));

  for (const auto& [order, groups] : abelian_groups_by_order()) {
    if (order > 8) continue;
    for (const auto& f : groups) {
      auto labels = abelian_labels(f);
      labels.push_back("X");
      add("ty(" + factors_name(f) + ")", gen_ty(abelian_group(f), std::move(labels)));
    }
  }
  add("ty(Z16)", gen_ty(cyclic_group(16)));
  add("ty(Z2xZ2xZ2xZ2)", gen_ty(abelian_group({2, 2, 2, 2})));

  add("yang_lee", gen_yang_lee());
  for (int order = 1; order <= 3; ++order)
    for (int kappa = 1; kappa <= 2; ++kappa) {
      if (order == 1 && kappa == 1) continue;  // yang_lee above
      add("near_group(Z" + std::to_string(order) + ",k=" + std::to_string(kappa) + ")",
          gen_near_group(cyclic_group(order), kappa));
    }

  for (int n = 1; n <= 8; ++n) add("verlinde(" + std::to_string(n) + ")", gen_verlinde(n));
  add("moore_read", gen_moore_read());
  for (const char* key : {"S3", "D4", "Q8", "A4"}) add(std::string("rep(") + key + ")",
                                                       rep_corpus(key));

  // Generalized TY sweep with a genuinely non-invertible object (|gamma| >= 2).
  for (const auto& [order, groups] : abelian_groups_by_order()) {
    if (order > 8) continue;
    for (const auto& f : groups) {
      GroupTable g = abelian_group(f);
      for (const auto& gamma : all_subgroups(g)) {
        if (gamma.size() < 2) continue;
        std::vector<char> used(g.order, 0);
        for (int rep = 0; rep < g.order; ++rep) {
          if (used[rep]) continue;
          for (int h : gamma) used[g.at(rep, h)] = 1;
          std::string gname;
          for (int h : gamma) gname += (gname.empty() ? "" : ".") + std::to_string(h);
          add("genty(" + factors_name(f) + ",{" + gname + "}," + std::to_string(rep) + ")",
              gen_gen_ty(g, gamma, rep));
        }
      }
    }
  }

  // Products of small factors, capped at rank 20.
  std::vector<NamedRing> pool;
  pool.push_back({"pointed(Z2)", gen_pointed(cyclic_group(2), abelian_labels({2}))});
  pool.push_back({"pointed(Z3)", gen_pointed(cyclic_group(3), abelian_labels({3}))});
  pool.push_back({"pointed(Z4)", gen_pointed(cyclic_group(4), abelian_labels({4}))});
  pool.push_back({"pointed(Z2xZ2)", gen_pointed(abelian_group({2, 2}), abelian_labels({2, 2}))});
  pool.push_back({"ising", gen_ising()});
  pool.push_back({"yang_lee", gen_yang_lee()});
  pool.push_back({"verlinde(3)", gen_verlinde(3)});
  pool.push_back({"verlinde(4)", gen_verlinde(4)});
  pool.push_back({"moore_read", gen_moore_read()});
  pool.push_back({"ty(Z2xZ2)", gen_ty(abelian_group({2, 2}))});
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].ring.rank * pool[j].ring.rank > 20) continue;
      add("prod(" + pool[i].name + "," + pool[j].name + ")",
          deligne_product(pool[i].ring, pool[j].ring));
    }

  return out;
}

}  // namespace fusion
