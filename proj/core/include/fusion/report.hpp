#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/analysis.hpp"
#include "fusion/grading.hpp"
#include "fusion/group.hpp"
#include "fusion/ring.hpp"

namespace fusion {

// Everything the analyze view shows, precomputed into plain data.
struct AnalyzeReport {
  std::string name;
  int rank = 0;
  bool commutative = false;
  std::vector<std::string> labels;  // resolved, one per basis index
  std::vector<double> dims;
  double total_dim = 0.0;
  std::vector<int> invertible_indices;
  std::string invertible_group_name;
  std::vector<int> orders;
  std::vector<int> faithful;
  std::vector<int> adjoint;                      // identity component
  std::vector<std::vector<int>> central_series;  // index sets, descending
  std::optional<int> nilpotency_class;
  std::string universal_group_name;
  GroupTable universal_group;
  std::vector<int> assign;
  std::vector<std::vector<int>> components;
};

AnalyzeReport analyze(const FusionRing& r, std::string name = "");
std::string render_analyze_text(const AnalyzeReport& a);
std::string render_analyze_json(const AnalyzeReport& a);

struct GradeReport {
  std::string group_name;
  GroupTable group;
  std::vector<std::string> labels;
  std::vector<int> assign;
  std::vector<std::vector<int>> components;
  std::vector<double> component_dims;
};

GradeReport grade(const FusionRing& r);
std::string render_grade_text(const GradeReport& g);
std::string render_grade_json(const GradeReport& g);

std::string render_validation_text(const ValidationReport& v);
std::string render_validation_json(const ValidationReport& v);

struct NamedTheoremReport {
  std::string name;
  TheoremReport report;
};
std::string render_theorems_text(const std::vector<NamedTheoremReport>& reports);
std::string render_theorems_json(const std::vector<NamedTheoremReport>& reports);

std::string render_iso_text(const std::optional<std::vector<int>>& map,
                            const FusionRing& a, const FusionRing& b);
std::string render_iso_json(const std::optional<std::vector<int>>& map);

std::string render_tymod_text(const ModularizationPrediction& p, int m);
std::string render_tymod_json(const ModularizationPrediction& p, int m);

}  // namespace fusion
