#pragma once

#include <array>

#include "lamglass/model.hpp"

namespace lamglass::benchmark {

// Three-point bending of a simply supported 5/0.38/5 mm glass/PVB/glass beam.
inline constexpr double kSpan = 0.8;      // [m]
inline constexpr double kWidth = 0.1;     // [m]
inline constexpr int kElements = 60;
inline constexpr double kGlassThickness = 5e-3;
inline constexpr double kInterlayerThickness = 0.38e-3;

Material glass();  // E = 64.5 GPa, nu = 0.23
Material pvb();    // E = 1.287 MPa (secant, 60 s, 22 C), nu = 0.4

LaminateSection section();

/// Full-span model: w fixed at both end nodes, u of the interlayer fixed at
/// the left support, point load P at the midspan node.
BeamModel full_model(double P = 50.0, int elements = kElements, double span = kSpan);

/// Left half of the full model on `elements` elements. The midspan node
/// carries P/2 and a symmetry condition (phi = 0 on every layer, u = 0 on the
/// interlayer); the left end has w = 0.
BeamModel half_model(double P = 50.0, int elements = kElements / 2, double span = kSpan);

/// Published reference values of the benchmark, used for relative-error
/// reporting and tolerance gating only. Deflections [mm], strains
/// [1e-6], stresses [MPa].
namespace reference {

inline constexpr std::array<double, 4> kLoads{50.0, 100.0, 150.0, 200.0};

inline constexpr std::array<double, 4> kDeflectionExperiment{1.27, 2.55, 4.12, 5.57};
inline constexpr std::array<double, 4> kDeflectionAnalytical{1.34, 2.69, 4.03, 5.38};
inline constexpr std::array<double, 4> kDeflectionNumerical{1.34, 2.68, 4.02, 5.36};

inline constexpr std::array<double, 4> kStrainAnalytical{112.0, 224.0, 336.0, 448.0};
inline constexpr std::array<double, 4> kStrainNumerical{114.0, 228.0, 341.0, 455.0};
inline constexpr std::array<double, 4> kStressAnalytical{7.23, 14.45, 21.68, 28.9};
inline constexpr std::array<double, 4> kStressNumerical{7.34, 14.68, 22.02, 29.36};

// 50 N, analytical reference solutions of the limiting cases
inline constexpr double kMonolithicDeflection = 0.99;   // 10 mm glass
inline constexpr double kIndependentDeflection = 3.97;  // 5/5 mm glass, no interlayer

}  // namespace reference

/// Tolerances (relative) applied by the benchmark gate.
namespace tolerance {
inline constexpr double kDeflection50 = 0.005;
inline constexpr double kDeflectionSweep = 0.01;
inline constexpr double kStrainStress = 0.02;
inline constexpr double kBounds = 0.01;
}  // namespace tolerance

}  // namespace lamglass::benchmark
