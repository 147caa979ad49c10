#include "lamglass/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/cuthill_mckee_ordering.hpp>
#include <fmt/format.h>
#include <lapacke.h>

#include "lamglass/errors.hpp"

namespace lamglass {

double Solution::max_abs_u() const {
  double m = 0.0;
  for (int i = 0; i < dofs.layers(); ++i) {
    for (int j = 0; j < dofs.nodes(); ++j) m = std::max(m, std::abs(u(i, j)));
  }
  return m;
}

double Solution::vertical_reaction() const {
  double total = 0.0;
  for (const auto& r : reactions) {
    if (dofs.is_deflection(r.dof)) total += r.value;
  }
  return total;
}

namespace {

// b - A x, accumulated in long double.
Eigen::VectorXd extended_residual(const SparseMatrix& A, const Eigen::VectorXd& x, const Eigen::VectorXd& b) {
  std::vector<long double> acc(static_cast<std::size_t>(b.size()));
  for (Index i = 0; i < b.size(); ++i) acc[static_cast<std::size_t>(i)] = b(i);
  for (Index col = 0; col < A.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(A, col); it; ++it) {
      acc[static_cast<std::size_t>(it.row())] -= static_cast<long double>(it.value()) * x(col);
    }
  }
  Eigen::VectorXd r(b.size());
  for (Index i = 0; i < b.size(); ++i) r(i) = static_cast<double>(acc[static_cast<std::size_t>(i)]);
  return r;
}

// Symmetric Ruiz scaling: returns d such that diag(d) A diag(d) has rows of
// unit max-norm (up to the iteration tolerance).
Eigen::VectorXd equilibrate(const SparseMatrix& A) {
  const Index n = A.rows();
  Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
  for (int iter = 0; iter < 20; ++iter) {
    Eigen::VectorXd row_max = Eigen::VectorXd::Zero(n);
    for (Index col = 0; col < A.outerSize(); ++col) {
      for (SparseMatrix::InnerIterator it(A, col); it; ++it) {
        const double v = std::abs(d(it.row()) * it.value() * d(col));
        row_max(it.row()) = std::max(row_max(it.row()), v);
      }
    }
    double worst = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (row_max(i) > 0.0) {
        d(i) /= std::sqrt(row_max(i));
        worst = std::max(worst, std::abs(1.0 - row_max(i)));
      }
    }
    if (worst < 1e-3) break;
  }
  return d;
}

// Reverse Cuthill-McKee order: order[k] is the unknown placed at position k.
std::vector<Index> rcm_order(const SparseMatrix& A) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_color_t, boost::default_color_type,
                                                      boost::property<boost::vertex_degree_t, int>>>;
  using Vertex = boost::graph_traits<Graph>::vertex_descriptor;
  const auto n = static_cast<std::size_t>(A.rows());
  Graph g(n);
  for (Index col = 0; col < A.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(A, col); it; ++it) {
      if (it.row() < col) boost::add_edge(static_cast<Vertex>(it.row()), static_cast<Vertex>(col), g);
    }
  }
  std::vector<Vertex> inv(n);
  boost::cuthill_mckee_ordering(g, inv.rbegin(), boost::get(boost::vertex_color, g), boost::make_degree_map(g));
  return {inv.begin(), inv.end()};
}

class BandedLU {
 public:
  BandedLU(const SparseMatrix& A, const std::vector<Index>& position) : n_(A.rows()) {
    for (Index col = 0; col < A.outerSize(); ++col) {
      for (SparseMatrix::InnerIterator it(A, col); it; ++it) {
        bw_ = std::max<Index>(bw_, std::abs(position[static_cast<std::size_t>(it.row())] -
                                            position[static_cast<std::size_t>(col)]));
      }
    }
    ldab_ = 3 * bw_ + 1;
    ab_.assign(static_cast<std::size_t>(ldab_ * n_), 0.0);
    for (Index col = 0; col < A.outerSize(); ++col) {
      for (SparseMatrix::InnerIterator it(A, col); it; ++it) {
        const Index i = position[static_cast<std::size_t>(it.row())];
        const Index j = position[static_cast<std::size_t>(col)];
        ab_[static_cast<std::size_t>(j * ldab_ + 2 * bw_ + i - j)] += it.value();
      }
    }
    ipiv_.resize(static_cast<std::size_t>(std::max<Index>(n_, 1)));
    if (n_ > 0) {
      LAPACKE_dgbtrf(LAPACK_COL_MAJOR, static_cast<lapack_int>(n_), static_cast<lapack_int>(n_),
                     static_cast<lapack_int>(bw_), static_cast<lapack_int>(bw_), ab_.data(),
                     static_cast<lapack_int>(ldab_), ipiv_.data());
    }
  }

  double pivot(Index j) const { return ab_[static_cast<std::size_t>(j * ldab_ + 2 * bw_)]; }

  // In-place solve in permuted numbering.
  void solve(Eigen::VectorXd& b) const {
    if (n_ == 0) return;
    LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(n_), static_cast<lapack_int>(bw_),
                   static_cast<lapack_int>(bw_), 1, ab_.data(), static_cast<lapack_int>(ldab_), ipiv_.data(),
                   b.data(), static_cast<lapack_int>(n_));
  }

 private:
  Index n_ = 0;
  Index bw_ = 0;
  Index ldab_ = 1;
  std::vector<double> ab_;
  std::vector<lapack_int> ipiv_;
};

}  // namespace

Solution solve(const ReducedSystem& system) {
  const SparseMatrix& A = system.K;
  const Eigen::VectorXd& b = system.R;
  const Index n = A.rows();

  const Eigen::VectorXd d = equilibrate(A);
  const SparseMatrix scaled = d.asDiagonal() * A * d.asDiagonal();

  const auto order = rcm_order(scaled);
  std::vector<Index> position(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < order.size(); ++k) position[static_cast<std::size_t>(order[k])] = static_cast<Index>(k);

  const BandedLU lu(scaled, position);

  double max_diag = 0.0;
  for (Index i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(scaled.coeff(i, i)));
  if (max_diag == 0.0) {
    for (Index col = 0; col < scaled.outerSize(); ++col)
      for (SparseMatrix::InnerIterator it(scaled, col); it; ++it) max_diag = std::max(max_diag, std::abs(it.value()));
  }

  Solution sol;
  sol.min_pivot_ratio = n > 0 ? std::numeric_limits<double>::infinity() : 1.0;
  for (Index j = 0; j < n; ++j) {
    const double ratio = max_diag > 0.0 ? std::abs(lu.pivot(j)) / max_diag : 0.0;
    sol.min_pivot_ratio = std::min(sol.min_pivot_ratio, ratio);
    if (!(ratio >= kSingularPivotRatio)) {
      const Index full_dof = system.free_dofs[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
      throw SingularSystemError(
          fmt::format("singular system: pivot {} ({}) is {:.3e} of the largest diagonal entry; "
                      "the supports probably leave a rigid-body mode free",
                      j, system.full.dofs.describe(full_dof), ratio),
          static_cast<std::size_t>(full_dof));
    }
  }

  const auto solve_scaled = [&](const Eigen::VectorXd& rhs) {
    Eigen::VectorXd y(n);
    for (Index i = 0; i < n; ++i) y(position[static_cast<std::size_t>(i)]) = d(i) * rhs(i);
    lu.solve(y);
    Eigen::VectorXd x(n);
    for (Index i = 0; i < n; ++i) x(i) = d(i) * y(position[static_cast<std::size_t>(i)]);
    return x;
  };

  // Refinement with residuals accumulated in extended precision brings the
  // forward error down to roughly unit roundoff despite the stiffness contrast
  // between unknown families.
  const auto residual = [&](const Eigen::VectorXd& x) { return extended_residual(A, x, b); };

  Eigen::VectorXd x = solve_scaled(b);
  Eigen::VectorXd r = residual(x);
  for (int step = 0; step < 5; ++step) {
    const Eigen::VectorXd dx = solve_scaled(r);
    x += dx;
    r = residual(x);
    if ((dx.array().abs() <= std::numeric_limits<double>::epsilon() * x.array().abs()).all()) break;
  }

  const double bnorm = b.norm();
  sol.residual = bnorm > 0.0 ? r.norm() / bnorm : r.norm();
  double a_inf = 0.0;
  {
    Eigen::VectorXd row_sum = Eigen::VectorXd::Zero(n);
    for (Index col = 0; col < A.outerSize(); ++col)
      for (SparseMatrix::InnerIterator it(A, col); it; ++it) row_sum(it.row()) += std::abs(it.value());
    if (n > 0) a_inf = row_sum.maxCoeff();
  }
  const double scale = n > 0 ? a_inf * x.cwiseAbs().maxCoeff() + b.cwiseAbs().maxCoeff() : 0.0;
  sol.backward_error = scale > 0.0 ? r.cwiseAbs().maxCoeff() / scale : 0.0;

  sol.x = system.expand(x);
  sol.dofs = system.full.dofs;
  sol.mesh = system.full.mesh;

  const Eigen::VectorXd full_residual = -extended_residual(system.full.K, sol.x, system.full.R);
  for (Index dof : system.fixed) sol.reactions.push_back({dof, full_residual(dof)});
  for (Index i = 0; i < sol.dofs.size(); ++i) {
    if (sol.dofs.is_multiplier(i)) sol.constraint_residual = std::max(sol.constraint_residual, std::abs(full_residual(i)));
  }
  return sol;
}

}  // namespace lamglass
