#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "lamglass/model.hpp"

namespace lamglass {

using Index = Eigen::Index;
using SparseMatrix = Eigen::SparseMatrix<double>;

enum class DofOrdering {
  /// (u, phi) of layer 1, ..., layer n, then all w, then all multipliers.
  LayerBlocked,
  /// All unknowns of node 0, then node 1, ...
  NodeBlocked,
};

class DofMap {
 public:
  DofMap() = default;
  DofMap(int layers, int nodes, DofOrdering ordering = DofOrdering::LayerBlocked);

  int layers() const { return layers_; }
  int nodes() const { return nodes_; }
  int interfaces() const { return layers_ - 1; }
  Index size() const { return static_cast<Index>(nodes_) * per_node(); }
  DofOrdering ordering() const { return ordering_; }

  Index u(int layer, int node) const;
  Index phi(int layer, int node) const;
  Index w(int node) const;
  Index lambda(int interface, int node) const;

  bool is_multiplier(Index dof) const;
  bool is_deflection(Index dof) const;

  /// Human-readable name such as "phi(layer 2, node 30)".
  std::string describe(Index dof) const;

 private:
  Index per_node() const { return 2 * layers_ + 1 + (layers_ - 1); }

  int layers_ = 0;
  int nodes_ = 0;
  DofOrdering ordering_ = DofOrdering::LayerBlocked;
};

DofMap number_dofs(const BeamModel& model, DofOrdering ordering = DofOrdering::LayerBlocked);

/// Bordered stiffness system [K, E^T; E, 0] x = R before supports.
struct GlobalSystem {
  SparseMatrix K;
  Eigen::VectorXd R;
  DofMap dofs;
  Mesh1D mesh;
};

GlobalSystem assemble(const BeamModel& model, DofOrdering ordering = DofOrdering::LayerBlocked);

/// System with the supported unknowns removed by row/column deletion.
struct ReducedSystem {
  GlobalSystem full;
  std::vector<Index> fixed;      // full-system indices, ascending
  std::vector<Index> free_dofs;  // reduced index -> full index
  SparseMatrix K;
  Eigen::VectorXd R;

  /// Scatters a reduced vector into a full-length vector with zeros at the
  /// fixed unknowns.
  Eigen::VectorXd expand(const Eigen::VectorXd& reduced) const;
};

Index support_dof(const DofMap& dofs, const Support& support);

/// Throws ValidationError if a support references a missing unknown or the
/// same unknown is fixed twice.
ReducedSystem apply_supports(GlobalSystem system, std::span<const Support> supports);

}  // namespace lamglass
