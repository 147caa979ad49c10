#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lamglass/model.hpp"
#include "lamglass/postprocess.hpp"
#include "lamglass/solver.hpp"

namespace lamglass {

/// Result of the full model -> assemble -> solve -> postprocess pipeline.
struct Analysis {
  BeamModel model;
  Solution solution;
  ElementFields fields;
  InterfaceTractions tractions;

  double midspan_deflection() const { return deflection_at(solution, 0.5 * model.mesh.span); }
  ExtremeFiber extreme_fiber() const { return max_extreme_fiber(fields, model.section.ply_indices()); }
};

Analysis analyze(const BeamModel& model);

/// eta = (value - reference) / reference.
inline double relative_difference(double value, double reference) { return (value - reference) / reference; }

struct Comparison {
  std::string label;
  double value = 0.0;
  double reference = 0.0;

  double eta() const { return relative_difference(value, reference); }
};

struct RunReport {
  BeamModel model;
  double midspan_deflection_mm = 0.0;
  double max_stress_MPa = 0.0;
  double max_strain_micro = 0.0;
  std::optional<double> monolithic_mm;   // absent when the plies cannot be merged
  double independent_mm = 0.0;
  std::vector<Comparison> comparisons;
};

/// Bound values assume the total vertical load acts as one central point load.
RunReport make_report(const Analysis& analysis, std::vector<Comparison> comparisons = {});

void write_report_text(std::ostream& out, const RunReport& report);

/// One row per node: x [m], w [mm], per layer N [N], V [N], M [N m],
/// sig_top, sig_bot [MPa], then per interface the shear traction [kPa].
void write_solution_csv(std::ostream& out, const Analysis& analysis);

struct ConvergenceRow {
  int elements = 0;
  double midspan_deflection = 0.0;  // [m]
};

/// One pipeline run per element count, sorted by element count.
std::vector<ConvergenceRow> convergence_study(const BeamModel& model, std::vector<int> element_counts);

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

struct BenchmarkOutcome {
  std::string text;
  std::string csv;
  bool within_tolerance = true;
};

/// Runs the embedded three-point bending benchmark, tabulates deflections,
/// strains, stresses and bounds against the reference dataset and checks the
/// tolerances.
BenchmarkOutcome run_benchmark();

}  // namespace lamglass
