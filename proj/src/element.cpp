#include "lamglass/element.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace lamglass {

Eigen::Matrix<double, 6, 6> ElementLayerMatrices::full() const {
  Eigen::Matrix<double, 6, 6> k;
  k.topLeftCorner<4, 4>() = K_e;
  k.topRightCorner<4, 2>() = K_ew;
  k.bottomLeftCorner<2, 4>() = K_ew.transpose();
  k.bottomRightCorner<2, 2>() = K_w;
  return k;
}

ElementLayerMatrices layer_element_matrices(const LayerRigidity& rigidity, double length, double fx, double fz) {
  const auto [EA, EI, kGA] = rigidity;
  if (!(EA > 0.0) || !(EI > 0.0) || !(kGA > 0.0) || !(length > 0.0)) {
    throw std::domain_error(fmt::format(
        "layer_element_matrices: EA, EI, kGA and length must be positive (got {}, {}, {}, {})", EA, EI, kGA,
        length));
  }

  ElementLayerMatrices m;
  const double axial = EA / length;
  const double bending = EI / length;
  const double shear_rot = kGA * length / 4.0;
  const double shear_cross = kGA / 2.0;
  const double shear_w = kGA / length;

  m.K_e.setZero();
  m.K_e(0, 0) = axial;
  m.K_e(1, 1) = axial;
  m.K_e(0, 1) = -axial;
  m.K_e(1, 0) = -axial;
  m.K_e(2, 2) = bending + shear_rot;
  m.K_e(3, 3) = bending + shear_rot;
  m.K_e(2, 3) = -bending + shear_rot;
  m.K_e(3, 2) = -bending + shear_rot;

  // d(gamma)/d(phi_a,phi_b) = 1/2, d(gamma)/d(w_a,w_b) = [-1, 1]/length
  m.K_ew.setZero();
  m.K_ew(2, 0) = -shear_cross;
  m.K_ew(2, 1) = shear_cross;
  m.K_ew(3, 0) = -shear_cross;
  m.K_ew(3, 1) = shear_cross;

  m.K_w << shear_w, -shear_w, -shear_w, shear_w;

  m.R_e << 0.5 * fx * length, 0.5 * fx * length, 0.0, 0.0;
  m.R_w << 0.5 * fz * length, 0.5 * fz * length;
  return m;
}

Eigen::MatrixXd constraint_matrix(std::span<const double> thicknesses) {
  const auto n = static_cast<Eigen::Index>(thicknesses.size());
  for (double h : thicknesses) {
    if (!(h > 0.0)) throw std::domain_error(fmt::format("constraint_matrix: thickness must be positive (got {})", h));
  }
  if (n == 0) throw std::domain_error("constraint_matrix: at least one layer is required");

  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(2 * (n - 1), 4 * n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double upper = 0.5 * thicknesses[static_cast<std::size_t>(i)];
    const double lower = 0.5 * thicknesses[static_cast<std::size_t>(i + 1)];
    for (Eigen::Index node = 0; node < 2; ++node) {
      const Eigen::Index row = 2 * i + node;
      E(row, 4 * i + node) = 1.0;
      E(row, 4 * i + 2 + node) = upper;
      E(row, 4 * (i + 1) + node) = -1.0;
      E(row, 4 * (i + 1) + 2 + node) = lower;
    }
  }
  return E;
}

}  // namespace lamglass
