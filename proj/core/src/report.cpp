#include "fusion/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "fusion/fpdim.hpp"
#include "fusion/structure.hpp"

namespace fusion {

using nlohmann::json;

namespace {

std::vector<std::string> resolved_labels(const FusionRing& r) {
  std::vector<std::string> out;
  out.reserve(r.rank);
  for (int i = 0; i < r.rank; ++i) out.push_back(r.label(i));
  return out;
}

std::string label_list(const std::vector<std::string>& labels, const std::vector<int>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + labels[idx[i]];
  return s;
}

std::string fmt_dim(double d) {
  std::ostringstream os;
  if (near_integer(d))
    os << nearest_integer(d);
  else
    os << std::fixed << std::setprecision(6) << d;
  return os.str();
}

json group_json(const GroupTable& g) {
  json j;
  j["order"] = g.order;
  j["name"] = group_name(g);
  if (auto inv = abelian_invariant_factors(g)) j["invariant_factors"] = *inv;
  return j;
}

}  // namespace

AnalyzeReport analyze(const FusionRing& r, std::string name) {
  AnalyzeReport a;
  a.name = std::move(name);
  a.rank = r.rank;
  a.commutative = r.is_commutative();
  a.labels = resolved_labels(r);
  a.dims = fpdims(r);
  a.total_dim = fpdim_ring(r);
  auto [inv, group] = invertibles(r);
  a.invertible_indices = std::move(inv);
  a.invertible_group_name = group_name(group);
  a.orders.resize(r.rank);
  for (int i = 0; i < r.rank; ++i) a.orders[i] = order_of(r, i);
  a.faithful = faithful_simples(r);
  CentralSeries series = upper_central_series(r);
  for (const auto& s : series.chain) a.central_series.push_back(s.indices());
  a.nilpotency_class = series.nilpotency_class;
  UniversalGrading u = universal_grading(r);
  a.adjoint = u.components[0];
  a.universal_group_name = group_name(u.grading.group);
  a.universal_group = u.grading.group;
  a.assign = u.grading.assign;
  a.components = u.components;
  return a;
}

std::string render_analyze_text(const AnalyzeReport& a) {
  std::ostringstream os;
  if (!a.name.empty()) os << "ring: " << a.name << "\n";
  os << "rank: " << a.rank << (a.commutative ? " (commutative)" : " (noncommutative)") << "\n";
  os << "dimension: " << fmt_dim(a.total_dim) << "\n";
  os << "objects:\n";
  for (int i = 0; i < a.rank; ++i) {
    os << "  " << i << "  " << a.labels[i] << "  dim " << fmt_dim(a.dims[i]) << "  order "
       << a.orders[i];
    if (std::find(a.invertible_indices.begin(), a.invertible_indices.end(), i) !=
        a.invertible_indices.end())
      os << "  invertible";
    if (std::find(a.faithful.begin(), a.faithful.end(), i) != a.faithful.end()) os << "  faithful";
    os << "\n";
  }
  os << "invertibles: " << a.invertible_group_name << " {" << label_list(a.labels, a.invertible_indices)
     << "}\n";
  os << "adjoint: {" << label_list(a.labels, a.adjoint) << "}\n";
  os << "central series:";
  for (const auto& s : a.central_series) os << " {" << label_list(a.labels, s) << "}";
  os << "\n";
  if (a.nilpotency_class)
    os << "nilpotency class: " << *a.nilpotency_class << "\n";
  else
    os << "nilpotency class: none (series stabilizes above the unit)\n";
  os << "universal grading: " << a.universal_group_name << "\n";
  for (std::size_t g = 0; g < a.components.size(); ++g)
    os << "  component " << g << ": {" << label_list(a.labels, a.components[g]) << "}\n";
  return os.str();
}

std::string render_analyze_json(const AnalyzeReport& a) {
  json j;
  if (!a.name.empty()) j["name"] = a.name;
  j["rank"] = a.rank;
  j["commutative"] = a.commutative;
  j["labels"] = a.labels;
  j["dims"] = a.dims;
  j["total_dim"] = a.total_dim;
  j["invertibles"] = {{"indices", a.invertible_indices}, {"group", a.invertible_group_name}};
  j["orders"] = a.orders;
  j["faithful"] = a.faithful;
  j["adjoint"] = a.adjoint;
  j["central_series"] = a.central_series;
  if (a.nilpotency_class)
    j["nilpotency_class"] = *a.nilpotency_class;
  else
    j["nilpotency_class"] = nullptr;
  j["universal_grading"] = {{"group", a.universal_group_name},
                            {"order", a.universal_group.order},
                            {"assign", a.assign},
                            {"components", a.components}};
  return j.dump(2) + "\n";
}

GradeReport grade(const FusionRing& r) {
  GradeReport g;
  UniversalGrading u = universal_grading(r);
  g.group_name = fusion::group_name(u.grading.group);
  g.group = u.grading.group;
  g.labels = resolved_labels(r);
  g.assign = u.grading.assign;
  g.components = u.components;
  std::vector<double> dims = fpdims(r);
  for (const auto& comp : g.components) {
    double s = 0.0;
    for (int i : comp) s += dims[i] * dims[i];
    g.component_dims.push_back(s);
  }
  return g;
}

std::string render_grade_text(const GradeReport& g) {
  std::ostringstream os;
  os << "universal grading group: " << g.group_name << " (order " << g.group.order << ")\n";
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    os << "component " << c << " (dim " << fmt_dim(g.component_dims[c]) << "): {"
       << label_list(g.labels, g.components[c]) << "}\n";
  }
  os << "assignment:";
  for (std::size_t i = 0; i < g.assign.size(); ++i)
    os << " " << g.labels[i] << "->" << g.assign[i];
  os << "\n";
  return os.str();
}

std::string render_grade_json(const GradeReport& g) {
  json j;
  j["group"] = group_json(g.group);
  j["assign"] = g.assign;
  j["components"] = g.components;
  j["component_dims"] = g.component_dims;
  j["labels"] = g.labels;
  return j.dump(2) + "\n";
}

std::string render_validation_text(const ValidationReport& v) {
  std::ostringstream os;
  if (v.ok) {
    os << "valid fusion ring\n";
  } else {
    os << "invalid: " << v.identity << " fails at (";
    for (std::size_t i = 0; i < v.where.size(); ++i) os << (i ? "," : "") << v.where[i];
    os << "): " << v.message << "\n";
  }
  return os.str();
}

std::string render_validation_json(const ValidationReport& v) {
  json j;
  j["ok"] = v.ok;
  if (!v.ok) {
    j["identity"] = v.identity;
    j["where"] = v.where;
    j["message"] = v.message;
  }
  return j.dump(2) + "\n";
}

namespace {

json theorem_json(const TheoremReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc;
    jc["id"] = c.id;
    jc["hypotheses_met"] = c.hypotheses_met;
    if (c.hypotheses_met) jc["conclusion_holds"] = c.conclusion_holds;
    if (!c.witness.empty()) jc["detail"] = c.witness;
    checks.push_back(std::move(jc));
  }
  return {{"checks", std::move(checks)}, {"all_pass", r.all_pass()}};
}

}  // namespace

std::string render_theorems_text(const std::vector<NamedTheoremReport>& reports) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& nr : reports) {
    os << nr.name << ":\n";
    for (const auto& c : nr.report.checks) {
      const char* status = !c.hypotheses_met  ? "skip"
                           : c.conclusion_holds ? "pass"
                                                : "FAIL";
      os << "  [" << status << "] " << c.id;
      if (!c.witness.empty()) os << " -- " << c.witness;
      os << "\n";
      failed += c.hypotheses_met && !c.conclusion_holds;
    }
  }
  os << reports.size() << " rings checked, " << failed << " failing checks\n";
  return os.str();
}

std::string render_theorems_json(const std::vector<NamedTheoremReport>& reports) {
  json j = json::array();
  bool all = true;
  for (const auto& nr : reports) {
    json e = theorem_json(nr.report);
    e["name"] = nr.name;
    all = all && nr.report.all_pass();
    j.push_back(std::move(e));
  }
  return json{{"rings", std::move(j)}, {"all_pass", all}}.dump(2) + "\n";
}

std::string render_iso_text(const std::optional<std::vector<int>>& map, const FusionRing& a,
                            const FusionRing& b) {
  std::ostringstream os;
  if (!map) {
    os << "not isomorphic\n";
    return os.str();
  }
  os << "isomorphic\n";
  for (std::size_t i = 0; i < map->size(); ++i)
    os << "  " << a.label(static_cast<int>(i)) << " -> " << b.label((*map)[i]) << "\n";
  return os.str();
}

std::string render_iso_json(const std::optional<std::vector<int>>& map) {
  json j;
  j["isomorphic"] = map.has_value();
  if (map) j["map"] = *map;
  return j.dump(2) + "\n";
}

namespace {

const char* kind_name(ModularizationKind k) {
  switch (k) {
    case ModularizationKind::kPointedFPdim4:
      return "pointed-dim-4";
    case ModularizationKind::kIsing:
      return "ising-shaped";
    case ModularizationKind::kSymmetricOrPointedFPdim2:
      return "symmetric-or-pointed-dim-2";
  }
  return "unknown";
}

}  // namespace

std::string render_tymod_text(const ModularizationPrediction& p, int m) {
  std::ostringstream os;
  os << "group: (Z2)^" << m << "\n";
  os << "integral: " << (p.integral ? "yes" : "no") << "\n";
  os << "transparent subgroup index: " << p.transparent.index << "\n";
  os << "transparent basis:";
  if (p.transparent.basis.empty()) os << " (trivial)";
  for (auto v : p.transparent.basis) os << " " << v;
  os << "\n";
  os << "modularization: " << kind_name(p.kind) << "\n";
  return os.str();
}

std::string render_tymod_json(const ModularizationPrediction& p, int m) {
  json j;
  j["m"] = m;
  j["integral"] = p.integral;
  j["transparent"] = {{"index", p.transparent.index}, {"basis", p.transparent.basis}};
  j["modularization"] = kind_name(p.kind);
  return j.dump(2) + "\n";
}

}  // namespace fusion
