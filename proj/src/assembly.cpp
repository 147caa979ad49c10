#include "lamglass/assembly.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "lamglass/element.hpp"
#include "lamglass/errors.hpp"

namespace lamglass {

DofMap::DofMap(int layers, int nodes, DofOrdering ordering) : layers_(layers), nodes_(nodes), ordering_(ordering) {}

// Node-blocked slot layout within a node: u(0), phi(0), ..., u(n-1), phi(n-1), w, lambda(0..n-2).

Index DofMap::u(int layer, int node) const {
  if (ordering_ == DofOrdering::NodeBlocked) return static_cast<Index>(node) * per_node() + 2 * layer;
  return static_cast<Index>(layer) * 2 * nodes_ + node;
}

Index DofMap::phi(int layer, int node) const {
  if (ordering_ == DofOrdering::NodeBlocked) return static_cast<Index>(node) * per_node() + 2 * layer + 1;
  return static_cast<Index>(layer) * 2 * nodes_ + nodes_ + node;
}

Index DofMap::w(int node) const {
  if (ordering_ == DofOrdering::NodeBlocked) return static_cast<Index>(node) * per_node() + 2 * layers_;
  return static_cast<Index>(layers_) * 2 * nodes_ + node;
}

Index DofMap::lambda(int interface, int node) const {
  if (ordering_ == DofOrdering::NodeBlocked)
    return static_cast<Index>(node) * per_node() + 2 * layers_ + 1 + interface;
  return static_cast<Index>(2 * layers_ + 1) * nodes_ + static_cast<Index>(interface) * nodes_ + node;
}

bool DofMap::is_multiplier(Index dof) const {
  if (ordering_ == DofOrdering::NodeBlocked) return dof % per_node() > 2 * layers_;
  return dof >= static_cast<Index>(2 * layers_ + 1) * nodes_;
}

bool DofMap::is_deflection(Index dof) const {
  if (ordering_ == DofOrdering::NodeBlocked) return dof % per_node() == 2 * layers_;
  const Index start = 2 * static_cast<Index>(layers_) * nodes_;
  return dof >= start && dof < start + nodes_;
}

std::string DofMap::describe(Index dof) const {
  int node = 0;
  Index slot = 0;  // node-blocked slot
  if (ordering_ == DofOrdering::NodeBlocked) {
    node = static_cast<int>(dof / per_node());
    slot = dof % per_node();
  } else {
    const Index block = 2 * static_cast<Index>(nodes_) * layers_;
    if (dof < block) {
      const Index layer = dof / (2 * nodes_);
      const Index rest = dof % (2 * nodes_);
      node = static_cast<int>(rest % nodes_);
      slot = 2 * layer + (rest >= nodes_ ? 1 : 0);
    } else if (dof < block + nodes_) {
      node = static_cast<int>(dof - block);
      slot = 2 * layers_;
    } else {
      const Index rest = dof - block - nodes_;
      node = static_cast<int>(rest % nodes_);
      slot = 2 * layers_ + 1 + rest / nodes_;
    }
  }
  if (slot < 2 * layers_) {
    return fmt::format("{}(layer {}, node {})", slot % 2 == 0 ? "u" : "phi", slot / 2 + 1, node);
  }
  if (slot == 2 * layers_) return fmt::format("w(node {})", node);
  return fmt::format("lambda(interface {}, node {})", slot - 2 * layers_, node);
}

DofMap number_dofs(const BeamModel& model, DofOrdering ordering) {
  return DofMap(static_cast<int>(model.section.layer_count()), model.mesh.node_count(), ordering);
}

GlobalSystem assemble(const BeamModel& model, DofOrdering ordering) {
  validate(model);
  const auto& section = model.section;
  const int n_layers = static_cast<int>(section.layer_count());
  const int n_el = model.mesh.elements;
  const double length = model.mesh.element_length();

  GlobalSystem sys;
  sys.dofs = number_dofs(model, ordering);
  sys.mesh = model.mesh;
  const Index n = sys.dofs.size();
  sys.R = Eigen::VectorXd::Zero(n);

  std::vector<double> fx(static_cast<std::size_t>(n_layers), 0.0), fz(static_cast<std::size_t>(n_layers), 0.0);
  for (const auto& d : model.load.distributed) {
    fx[static_cast<std::size_t>(d.layer)] += d.fx;
    fz[static_cast<std::size_t>(d.layer)] += d.fz;
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n_el) * (36 * n_layers + 16 * (n_layers - 1)));

  for (int layer = 0; layer < n_layers; ++layer) {
    const auto li = static_cast<std::size_t>(layer);
    const LayerRigidity rigidity{section.EA(li), section.EI(li), section.kGA(li)};
    const auto m = layer_element_matrices(rigidity, length, fx[li], fz[li]);
    const auto k = m.full();
    Eigen::Matrix<double, 6, 1> r;
    r << m.R_e, m.R_w;
    for (int e = 0; e < n_el; ++e) {
      const std::array<Index, 6> map{sys.dofs.u(layer, e),   sys.dofs.u(layer, e + 1),
                                     sys.dofs.phi(layer, e), sys.dofs.phi(layer, e + 1),
                                     sys.dofs.w(e),          sys.dofs.w(e + 1)};
      for (int a = 0; a < 6; ++a) {
        sys.R(map[a]) += r(a);
        for (int b = 0; b < 6; ++b) {
          if (k(a, b) != 0.0) triplets.emplace_back(map[a], map[b], k(a, b));
        }
      }
    }
  }

  // Tying rows are nodal: both elements sharing a node own the same
  // multiplier, so each row is emitted once per node.
  const auto h = section.thicknesses();
  const Eigen::MatrixXd tie = constraint_matrix(h);
  for (int i = 0; i + 1 < n_layers; ++i) {
    for (int node = 0; node < model.mesh.node_count(); ++node) {
      const Index row = sys.dofs.lambda(i, node);
      // Node a of the element pattern; coefficients are node independent.
      const Eigen::Index pattern_row = 2 * i;
      const std::array<std::pair<Index, double>, 4> entries{{
          {sys.dofs.u(i, node), tie(pattern_row, 4 * i)},
          {sys.dofs.phi(i, node), tie(pattern_row, 4 * i + 2)},
          {sys.dofs.u(i + 1, node), tie(pattern_row, 4 * (i + 1))},
          {sys.dofs.phi(i + 1, node), tie(pattern_row, 4 * (i + 1) + 2)},
      }};
      for (const auto& [col, value] : entries) {
        triplets.emplace_back(row, col, value);
        triplets.emplace_back(col, row, value);
      }
    }
  }

  for (const auto& p : model.load.point) sys.R(sys.dofs.w(p.node)) += p.P;

  sys.K.resize(n, n);
  sys.K.setFromTriplets(triplets.begin(), triplets.end());
  sys.K.makeCompressed();
  return sys;
}

Eigen::VectorXd ReducedSystem::expand(const Eigen::VectorXd& reduced) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(full.dofs.size());
  for (std::size_t k = 0; k < free_dofs.size(); ++k) x(free_dofs[k]) = reduced(static_cast<Index>(k));
  return x;
}

Index support_dof(const DofMap& dofs, const Support& support) {
  if (support.node < 0 || support.node >= dofs.nodes())
    throw ValidationError(fmt::format("support at node {} outside mesh", support.node));
  if (support.dof != SupportDof::W && (support.layer < 0 || support.layer >= dofs.layers()))
    throw ValidationError(fmt::format("support on layer {} outside section", support.layer + 1));
  switch (support.dof) {
    case SupportDof::W: return dofs.w(support.node);
    case SupportDof::U: return dofs.u(support.layer, support.node);
    case SupportDof::Phi: return dofs.phi(support.layer, support.node);
  }
  return -1;
}

ReducedSystem apply_supports(GlobalSystem system, std::span<const Support> supports) {
  ReducedSystem out;
  const Index n = system.dofs.size();
  std::vector<char> is_fixed(static_cast<std::size_t>(n), 0);
  for (const auto& s : supports) {
    const Index dof = support_dof(system.dofs, s);
    auto& flag = is_fixed[static_cast<std::size_t>(dof)];
    if (flag) throw ValidationError(fmt::format("{} is fixed twice", system.dofs.describe(dof)));
    flag = 1;
  }

  std::vector<Index> reduced_index(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    if (is_fixed[static_cast<std::size_t>(i)]) {
      out.fixed.push_back(i);
    } else {
      reduced_index[static_cast<std::size_t>(i)] = static_cast<Index>(out.free_dofs.size());
      out.free_dofs.push_back(i);
    }
  }

  const auto m = static_cast<Index>(out.free_dofs.size());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(system.K.nonZeros()));
  for (Index col = 0; col < system.K.outerSize(); ++col) {
    const Index rc = reduced_index[static_cast<std::size_t>(col)];
    if (rc < 0) continue;
    for (SparseMatrix::InnerIterator it(system.K, col); it; ++it) {
      const Index rr = reduced_index[static_cast<std::size_t>(it.row())];
      if (rr >= 0) triplets.emplace_back(rr, rc, it.value());
    }
  }
  out.K.resize(m, m);
  out.K.setFromTriplets(triplets.begin(), triplets.end());
  out.K.makeCompressed();
  out.R.resize(m);
  for (Index k = 0; k < m; ++k) out.R(k) = system.R(out.free_dofs[static_cast<std::size_t>(k)]);
  out.full = std::move(system);
  return out;
}

}  // namespace lamglass
