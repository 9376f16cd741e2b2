#include "fusion/grading.hpp"

#include <algorithm>
#include <numeric>

#include "fusion/errors.hpp"

namespace fusion {

bool GroupHom::is_surjective() const {
  std::vector<char> hit(codomain.order, 0);
  for (int v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool GroupHom::is_injective() const {
  std::vector<char> hit(codomain.order, 0);
  for (int v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

UniversalGrading universal_grading(const FusionRing& r) {
  BasisSubset ad = adjoint_subring(r);
  std::vector<int> ad_idx = ad.indices();

  // Orbits of the basis under left multiplication by the adjoint subring.
  // The relation i ~ k iff N(a, i, k) > 0 for some adjoint a is symmetric,
  // so plain flood fill suffices.
  std::vector<int> comp(r.rank, -1);
  int ncomp = 0;
  for (int start = 0; start < r.rank; ++start) {
    if (comp[start] >= 0) continue;
    int id = ncomp++;
    std::vector<int> stack = {start};
    comp[start] = id;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int a : ad_idx)
        for (int k = 0; k < r.rank; ++k)
          if (r.n(a, i, k) > 0 && comp[k] < 0) {
            comp[k] = id;
            stack.push_back(k);
          }
    }
  }
  // Flood fill from index 0 upward already yields ids ordered by minimal
  // basis index; component 0 contains the unit.

  std::vector<std::vector<int>> members(ncomp);
  for (int i = 0; i < r.rank; ++i) members[comp[i]].push_back(i);

  // Induced product, verified over every representative pair.
  std::vector<int> mul(static_cast<std::size_t>(ncomp) * ncomp, -1);
  for (int p = 0; p < ncomp; ++p)
    for (int q = 0; q < ncomp; ++q) {
      int target = -1;
      for (int i : members[p])
        for (int j : members[q]) {
          bool any = false;
          for (int k = 0; k < r.rank; ++k) {
            if (r.n(i, j, k) == 0) continue;
            any = true;
            if (target < 0) target = comp[k];
            if (comp[k] != target)
              throw grading_error("component product is not well defined at basis pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
          }
          if (!any)
            throw grading_error("empty product support at basis pair (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
        }
      mul[static_cast<std::size_t>(p) * ncomp + q] = target;
    }

  GroupTable table;
  try {
    table = make_group(ncomp, std::move(mul));
  } catch (const param_error& e) {
    throw grading_error(std::string("components do not form a group: ") + e.what());
  }

  for (int i = 0; i < r.rank; ++i)
    if (comp[r.dual[i]] != table.inverse[comp[i]])
      throw grading_error("dual does not invert the component of basis index " +
                          std::to_string(i));

  UniversalGrading out;
  out.grading.group = std::move(table);
  out.grading.assign = std::move(comp);
  out.components = std::move(members);
  return out;
}

bool verify_grading(const FusionRing& r, const GradingMap& g) {
  if (static_cast<int>(g.assign.size()) != r.rank) return false;
  for (int v : g.assign)
    if (v < 0 || v >= g.group.order) return false;
  if (g.assign[0] != 0) return false;
  for (int i = 0; i < r.rank; ++i)
    if (g.assign[r.dual[i]] != g.group.inverse[g.assign[i]]) return false;
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < r.rank; ++j) {
      int prod = g.group.at(g.assign[i], g.assign[j]);
      for (int k = 0; k < r.rank; ++k)
        if (r.n(i, j, k) > 0 && g.assign[k] != prod) return false;
    }
  return true;
}

GroupHom factor_through_universal(const FusionRing& r, const GradingMap& g) {
  if (!verify_grading(r, g)) throw grading_error("map is not a grading");
  UniversalGrading u = universal_grading(r);

  GroupHom phi;
  phi.domain = u.grading.group;
  phi.codomain = g.group;
  phi.map.assign(u.grading.group.order, -1);
  for (int i = 0; i < r.rank; ++i) {
    int& slot = phi.map[u.grading.assign[i]];
    if (slot < 0) slot = g.assign[i];
    if (slot != g.assign[i])
      throw grading_error("grading does not factor through the universal components");
  }
  for (int p = 0; p < phi.domain.order; ++p)
    for (int q = 0; q < phi.domain.order; ++q)
      if (phi.map[phi.domain.at(p, q)] != phi.codomain.at(phi.map[p], phi.map[q]))
        throw grading_error("factorization is not a homomorphism");
  return phi;
}

Subgroup restrict_grading(const FusionRing& r, const BasisSubset& d) {
  if (!is_closed_subring(r, d)) throw param_error("subset is not a closed subring");
  UniversalGrading u = universal_grading(r);
  std::vector<int> hit;
  for (int g = 0; g < u.grading.group.order; ++g) {
    bool meets = false;
    for (int i : u.components[g])
      if (d.contains(i)) {
        meets = true;
        break;
      }
    if (meets) hit.push_back(g);
  }
  return make_subgroup(u.grading.group, std::move(hit));
}

GroupHom subring_universal_map(const FusionRing& r, const BasisSubset& d) {
  auto [sub, embed] = restrict_to(r, d);
  UniversalGrading usub = universal_grading(sub);
  UniversalGrading u = universal_grading(r);

  GroupHom phi;
  phi.domain = usub.grading.group;
  phi.codomain = u.grading.group;
  phi.map.assign(phi.domain.order, -1);
  for (int s = 0; s < sub.rank; ++s) {
    int& slot = phi.map[usub.grading.assign[s]];
    int target = u.grading.assign[embed[s]];
    if (slot < 0) slot = target;
    if (slot != target)
      throw grading_error("subring components do not map to single ambient components");
  }
  for (int p = 0; p < phi.domain.order; ++p)
    for (int q = 0; q < phi.domain.order; ++q)
      if (phi.map[phi.domain.at(p, q)] != phi.codomain.at(phi.map[p], phi.map[q]))
        throw grading_error("induced component map is not a homomorphism");
  return phi;
}

GroupProfile group_profile(const GroupTable& g) {
  GroupProfile p;
  p.order = g.order;
  p.exponent = g.exponent();
  p.is_cyclic = g.is_cyclic();
  p.is_elementary_abelian_2 = p.exponent <= 2;
  return p;
}

}  // namespace fusion
