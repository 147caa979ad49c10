#pragma once

#include <span>

#include <Eigen/Dense>

namespace lamglass {

/// Cross-section rigidities of one layer.
struct LayerRigidity {
  double EA = 0.0;   // axial [N]
  double EI = 0.0;   // bending [N m^2]
  double kGA = 0.0;  // shear [N]
};

/// Condensed two-node element of one layer, partitioned into the layer's own
/// unknowns r_e = [u_a, u_b, phi_a, phi_b] and the shared deflections
/// r_w = [w_a, w_b].
struct ElementLayerMatrices {
  Eigen::Matrix4d K_e;
  Eigen::Matrix<double, 4, 2> K_ew;
  Eigen::Matrix2d K_w;
  Eigen::Vector4d R_e;
  Eigen::Vector2d R_w;

  /// The 6x6 matrix on [r_e; r_w].
  Eigen::Matrix<double, 6, 6> full() const;
};

/// Element matrices with linear u, w, phi and a constant shear strain
/// eliminated at element level. The condensed strain is
///   gamma = (phi_a + phi_b) / 2 + (w_b - w_a) / length,
/// stored as shear energy (kGA length / 2) gamma^2. `fx`, `fz` are uniform
/// line loads on the layer [N/m].
///
/// Throws std::domain_error unless EA, EI, kGA and length are positive.
ElementLayerMatrices layer_element_matrices(const LayerRigidity& rigidity, double length, double fx = 0.0,
                                            double fz = 0.0);

/// Interface tying rows of one element. Columns act on the stacked layer
/// unknowns [r_e(1); ...; r_e(n)]; for interface i and end node a (then b) a
/// row reads
///   u(i) + h(i)/2 phi(i) - u(i+1) + h(i+1)/2 phi(i+1) = 0.
/// Returns a 0 x 4 matrix for a single layer.
Eigen::MatrixXd constraint_matrix(std::span<const double> thicknesses);

}  // namespace lamglass
