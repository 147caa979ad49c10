#pragma once

#include <span>

#include "lamglass/model.hpp"

namespace lamglass {

enum class BoundCase { Monolithic, Independent };

/// Closed-form midspan deflection of a simply supported Timoshenko beam under
/// a central point load.
struct BoundResult {
  BoundCase kind = BoundCase::Monolithic;
  double deflection = 0.0;  // [m]
  double EI = 0.0;          // effective bending rigidity [N m^2]
  double kGA = 0.0;         // effective shear rigidity [N]
};

/// delta = P L^3 / (48 E I) + P L / (4 k G A) for a single section of depth
/// h_total. G may be +inf (shear-rigid).
BoundResult monolithic_deflection(double P, double L, double h_total, double b, double E, double G, double k);

struct PlyProperties {
  double h = 0.0;
  double E = 0.0;
  double G = 0.0;
};

/// Plies bending about their own axes with a common curvature:
/// EI = sum E I(i), kGA = sum k G A(i).
BoundResult independent_layers_deflection(double P, double L, std::span<const PlyProperties> plies, double b, double k);

/// Monolithic bound of the plies of a section (interlayers dropped, plies
/// merged into one depth). The plies must share one material.
BoundResult monolithic_bound(const LaminateSection& section, double P, double L);

/// Independent-layer bound of the plies of a section.
BoundResult independent_bound(const LaminateSection& section, double P, double L);

}  // namespace lamglass
