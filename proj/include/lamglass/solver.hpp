#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lamglass/assembly.hpp"

namespace lamglass {

struct Reaction {
  Index dof = 0;       // full-system index
  double value = 0.0;  // force exerted by the support on the beam [N] or [N m]
};

struct Solution {
  Eigen::VectorXd x;  // full length, zeros at supports
  DofMap dofs;
  Mesh1D mesh;
  std::vector<Reaction> reactions;

  double residual = 0.0;             // ||K x - R|| / ||R|| on the reduced system (absolute if R = 0)
  double backward_error = 0.0;       // ||K x - R||_inf / (||K||_inf ||x||_inf + ||R||_inf)
  double constraint_residual = 0.0;  // max |E x| over interface ties
  double min_pivot_ratio = 0.0;      // smallest |pivot| / max |diagonal| of the equilibrated matrix

  double u(int layer, int node) const { return x(dofs.u(layer, node)); }
  double phi(int layer, int node) const { return x(dofs.phi(layer, node)); }
  double w(int node) const { return x(dofs.w(node)); }
  double lambda(int interface, int node) const { return x(dofs.lambda(interface, node)); }

  /// Largest |u| over all layers and nodes.
  double max_abs_u() const;

  /// Sum of reactions acting on w unknowns.
  double vertical_reaction() const;
};

/// Pivots below this fraction of the largest diagonal entry of the
/// equilibrated matrix are reported as singular.
inline constexpr double kSingularPivotRatio = 1e-12;

/// Direct solve of the reduced bordered system.
///
/// The matrix is symmetrically equilibrated, reordered with reverse
/// Cuthill-McKee and factorised by banded LU with partial pivoting; one step
/// of iterative refinement follows. Throws SingularSystemError naming the
/// unknown whose pivot collapsed.
Solution solve(const ReducedSystem& system);

}  // namespace lamglass
