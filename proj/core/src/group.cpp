#include "fusion/group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

std::vector<int> compute_inverses(int order, const std::vector<int>& mul) {
  std::vector<int> inv(order, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (mul[static_cast<std::size_t>(a) * order + b] == 0) inv[a] = b;
  return inv;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

int GroupTable::power(int a, long long e) const {
  int acc = 0;
  int ord = element_order(a);
  e %= ord;            // C++ % truncates, so negative e needs a lift
  if (e < 0) e += ord;
  for (long long i = 0; i < e; ++i) acc = at(acc, a);
  return acc;
}

int GroupTable::element_order(int a) const {
  int x = a, n = 1;
  while (x != 0) {
    x = at(x, a);
    ++n;
  }
  return n;
}

std::vector<int> GroupTable::element_orders() const {
  std::vector<int> out(order);
  for (int a = 0; a < order; ++a) out[a] = element_order(a);
  return out;
}

long long GroupTable::exponent() const {
  long long e = 1;
  for (int a = 0; a < order; ++a) e = lcm_ll(e, element_order(a));
  return e;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (at(a, b) != at(b, a)) return false;
  return true;
}

bool GroupTable::is_cyclic() const {
  for (int a = 0; a < order; ++a)
    if (element_order(a) == order) return true;
  return false;
}

GroupTable make_group(int order, std::vector<int> mul) {
  if (order < 1) throw param_error("group order must be positive");
  if (static_cast<int>(mul.size()) != order * order)
    throw param_error("group table size mismatch");
  for (int v : mul)
    if (v < 0 || v >= order) throw param_error("group table entry out of range");

  int id = -1;
  for (int e = 0; e < order && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = mul[static_cast<std::size_t>(e) * order + a] == a &&
           mul[static_cast<std::size_t>(a) * order + e] == a;
    if (ok) id = e;
  }
  if (id < 0) throw param_error("group table has no identity");

  if (id != 0) {
    // Swap element ids 0 <-> id so the identity sits at 0.
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    perm[0] = id;
    perm[id] = 0;
    std::vector<int> remapped(mul.size());
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        int p = mul[static_cast<std::size_t>(perm[a]) * order + perm[b]];
        remapped[static_cast<std::size_t>(a) * order + b] = perm[p];  // perm is an involution
      }
    mul = std::move(remapped);
  }

  GroupTable g;
  g.order = order;
  g.mul = std::move(mul);
  g.inverse = compute_inverses(order, g.mul);
  for (int a = 0; a < order; ++a) {
    if (g.inverse[a] < 0) throw param_error("group table element without inverse");
    if (g.at(g.inverse[a], a) != 0 || g.at(a, g.inverse[a]) != 0)
      throw param_error("group table inverse law fails");
  }
  for (int a = 0; a < order; ++a) {
    std::vector<char> seen(order, 0);
    for (int b = 0; b < order; ++b) seen[g.at(a, b)] = 1;
    for (int b = 0; b < order; ++b)
      if (!seen[b]) throw param_error("group table row is not a permutation");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
          throw param_error("group table is not associative");
  return g;
}

GroupTable trivial_group() { return make_group(1, {0}); }

GroupTable cyclic_group(int n) {
  if (n < 1) throw param_error("cyclic group order must be positive");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return make_group(n, std::move(mul));
}

GroupTable abelian_group(const std::vector<int>& factors) {
  GroupTable g = trivial_group();
  for (int f : factors) g = direct_product(g, cyclic_group(f));
  return g;
}

int abelian_index(const std::vector<int>& factors, const std::vector<int>& tuple) {
  if (tuple.size() != factors.size()) throw param_error("group element tuple arity mismatch");
  int idx = 0, scale = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    int a = tuple[i] % factors[i];
    if (a < 0) a += factors[i];
    idx += a * scale;
    scale *= factors[i];
  }
  return idx;
}

std::vector<int> abelian_tuple(const std::vector<int>& factors, int index) {
  std::vector<int> t(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    t[i] = index % factors[i];
    index /= factors[i];
  }
  return t;
}

std::vector<std::string> abelian_labels(const std::vector<int>& factors) {
  int order = 1;
  for (int f : factors) order *= f;
  std::vector<std::string> out;
  out.reserve(order);
  if (factors.size() == 1) {
    out.push_back("e");
    for (int a = 1; a < order; ++a)
      out.push_back(a == 1 ? "g" : "g" + std::to_string(a));
    return out;
  }
  for (int idx = 0; idx < order; ++idx) {
    if (idx == 0) {
      out.push_back("e");
      continue;
    }
    auto t = abelian_tuple(factors, idx);
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(t[i]);
    }
    s += ')';
    out.push_back(std::move(s));
  }
  return out;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  int n = a.order * b.order;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  auto id = [&](int x, int y) { return x + a.order * y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          mul[static_cast<std::size_t>(id(x1, y1)) * n + id(x2, y2)] =
              id(a.at(x1, x2), b.at(y1, y2));
  return make_group(n, std::move(mul));
}

GroupTable symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic order; composition acts left
  // first: (p*q)(x) = q(p(x)).
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto find = [&](const std::array<int, 3>& q) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    return -1;
  };
  int n = 6;
  std::vector<int> mul(36);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[j][perms[i][x]];
      mul[static_cast<std::size_t>(i) * n + j] = find(comp);
    }
  return make_group(n, std::move(mul));
}

std::vector<int> subgroup_closure(const GroupTable& g, std::vector<int> gens) {
  std::set<int> elems = {0};
  for (int x : gens) {
    if (x < 0 || x >= g.order) throw param_error("subgroup generator out of range");
    elems.insert(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(elems.begin(), elems.end());
    for (int a : cur)
      for (int b : cur)
        if (elems.insert(g.at(a, b)).second) grew = true;
  }
  return {elems.begin(), elems.end()};
}

bool is_subgroup(const GroupTable& g, const std::vector<int>& elements) {
  std::set<int> s(elements.begin(), elements.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(g.at(a, b))) return false;
  return true;
}

bool is_normal_subgroup(const GroupTable& g, const std::vector<int>& elements) {
  if (!is_subgroup(g, elements)) return false;
  std::set<int> s(elements.begin(), elements.end());
  for (int x = 0; x < g.order; ++x)
    for (int h : s)
      if (!s.count(g.at(g.at(x, h), g.inverse[x]))) return false;
  return true;
}

Subgroup make_subgroup(const GroupTable& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  if (!is_subgroup(g, elements)) throw param_error("element set is not a subgroup");
  int n = static_cast<int>(elements.size());
  std::vector<int> pos(g.order, -1);
  for (int i = 0; i < n; ++i) pos[elements[i]] = i;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i) * n + j] = pos[g.at(elements[i], elements[j])];
  Subgroup out;
  out.elements = std::move(elements);
  out.table = make_group(n, std::move(mul));
  return out;
}

std::vector<std::vector<int>> all_subgroups(const GroupTable& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue = {subgroup_closure(g, {})};
  found.insert(queue[0]);
  while (!queue.empty()) {
    std::vector<int> h = std::move(queue.back());
    queue.pop_back();
    std::set<int> members(h.begin(), h.end());
    for (int x = 0; x < g.order; ++x) {
      if (members.count(x)) continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      std::vector<int> k = subgroup_closure(g, std::move(gens));
      if (found.insert(k).second) queue.push_back(std::move(k));
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::optional<std::vector<int>> abelian_invariant_factors(const GroupTable& g) {
  if (!g.is_abelian()) return std::nullopt;
  if (g.order == 1) return std::vector<int>{};

  // Per prime, the partition (lambda_1 >= lambda_2 >= ...) is recovered from
  // the counts of elements killed by p^k.
  std::map<int, std::vector<int>> partitions;  // prime -> exponents, descending
  int n = g.order;
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    std::vector<long long> killed;  // killed[k] = #{a : a^(p^k) = e}
    killed.push_back(1);
    while (true) {
      long long pk = 1;
      for (std::size_t i = 0; i < killed.size(); ++i) pk *= p;
      int cnt = 0;
      for (int a = 0; a < g.order; ++a)
        if (pk % g.element_order(a) == 0) ++cnt;
      killed.push_back(cnt);
      if (cnt == killed[killed.size() - 2]) break;  // stabilized
    }
    // m_k = #{i : lambda_i >= k} = log_p(killed[k] / killed[k-1])
    std::vector<int> m;
    for (std::size_t k = 1; k < killed.size(); ++k) {
      long long ratio = killed[k] / killed[k - 1];
      int e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      if (e > 0) m.push_back(e);
    }
    std::vector<int> lambda;
    for (std::size_t k = 0; k < m.size(); ++k)
      for (int i = 0; i < m[k]; ++i) {
        if (lambda.size() <= static_cast<std::size_t>(i)) lambda.push_back(0);
        lambda[i] = static_cast<int>(k) + 1;
      }
    partitions[p] = lambda;
  }

  std::size_t parts = 0;
  for (auto& [p, lambda] : partitions) parts = std::max(parts, lambda.size());
  std::vector<int> factors(parts, 1);
  for (auto& [p, lambda] : partitions)
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      int pe = 1;
      for (int k = 0; k < lambda[i]; ++k) pe *= p;
      factors[i] *= pe;
    }
  std::sort(factors.begin(), factors.end(), std::greater<>());
  return factors;
}

namespace {

// Greedy minimal generating chain for backtracking isomorphism search.
std::vector<int> generating_set(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<int> closure = {0};
  while (static_cast<int>(closure.size()) < g.order) {
    int best = -1, best_size = -1;
    for (int x = 0; x < g.order; ++x) {
      if (std::find(closure.begin(), closure.end(), x) != closure.end()) continue;
      std::vector<int> trial = gens;
      trial.push_back(x);
      int sz = static_cast<int>(subgroup_closure(g, trial).size());
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

bool extend_iso(const GroupTable& a, const GroupTable& b, const std::vector<int>& gens,
                std::size_t pos, std::vector<int>& map) {
  if (pos == gens.size()) return true;
  int ga = gens[pos];
  int need = a.element_order(ga);
  for (int img = 0; img < b.order; ++img) {
    if (b.element_order(img) != need) continue;
    // Tentatively extend: close the partial map over products.
    std::vector<int> trial = map;
    trial[ga] = img;
    bool ok = true;
    bool grew = true;
    while (grew && ok) {
      grew = false;
      for (int x = 0; x < a.order && ok; ++x) {
        if (trial[x] < 0) continue;
        for (int y = 0; y < a.order && ok; ++y) {
          if (trial[y] < 0) continue;
          int p = a.at(x, y), q = b.at(trial[x], trial[y]);
          if (trial[p] < 0) {
            trial[p] = q;
            grew = true;
          } else if (trial[p] != q) {
            ok = false;
          }
        }
      }
    }
    if (!ok) continue;
    // Injectivity on the defined part.
    std::vector<char> used(b.order, 0);
    for (int x = 0; x < a.order && ok; ++x) {
      if (trial[x] < 0) continue;
      if (used[trial[x]]) ok = false;
      used[trial[x]] = 1;
    }
    if (!ok) continue;
    if (extend_iso(a, b, gens, pos + 1, trial)) {
      map = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order != b.order) return false;
  std::vector<int> oa = a.element_orders(), ob = b.element_orders();
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return false;
  bool ab_a = a.is_abelian(), ab_b = b.is_abelian();
  if (ab_a != ab_b) return false;
  if (ab_a) return abelian_invariant_factors(a) == abelian_invariant_factors(b);

  std::vector<int> gens = generating_set(a);
  std::vector<int> map(a.order, -1);
  map[0] = 0;
  return extend_iso(a, b, gens, 0, map);
}

std::string group_name(const GroupTable& g) {
  if (auto fac = abelian_invariant_factors(g)) {
    if (fac->empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < fac->size(); ++i) {
      if (i) s += " x ";
      s += "Z" + std::to_string((*fac)[i]);
    }
    return s;
  }
  if (g.order == 6) return "S3";
  if (g.order == 8) {
    int invol = 0;
    for (int a = 1; a < g.order; ++a)
      if (g.element_order(a) == 2) ++invol;
    return invol == 5 ? "D4" : "Q8";
  }
  return "nonabelian(order " + std::to_string(g.order) + ")";
}

}  // namespace fusion
