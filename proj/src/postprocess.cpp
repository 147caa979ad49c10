#include "lamglass/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace lamglass {

ElementFields internal_forces(const Solution& solution, const BeamModel& model) {
  const auto& section = model.section;
  const int n_layers = static_cast<int>(section.layer_count());
  const int n_el = model.mesh.elements;
  const double length = model.mesh.element_length();

  ElementFields fields(n_el, n_layers);
  for (int i = 0; i < n_layers; ++i) {
    const auto li = static_cast<std::size_t>(i);
    const double E = section.layers[li].material.E;
    const double half_h = 0.5 * section.layers[li].h;
    for (int e = 0; e < n_el; ++e) {
      const double du = (solution.u(i, e + 1) - solution.u(i, e)) / length;
      const double dphi = (solution.phi(i, e + 1) - solution.phi(i, e)) / length;
      const double gamma =
          0.5 * (solution.phi(i, e) + solution.phi(i, e + 1)) + (solution.w(e + 1) - solution.w(e)) / length;

      auto& f = fields.at(e, i);
      f.N = section.EA(li) * du;
      f.M_a = f.M_b = section.EI(li) * dphi;
      f.V = section.kGA(li) * gamma;
      f.eps_top_a = f.eps_top_b = du - half_h * dphi;
      f.eps_bot_a = f.eps_bot_b = du + half_h * dphi;
      f.sig_top_a = f.sig_top_b = E * f.eps_top_a;
      f.sig_bot_a = f.sig_bot_b = E * f.eps_bot_a;
    }
  }
  return fields;
}

double deflection_at(const Solution& solution, double x) {
  const auto& mesh = solution.mesh;
  if (!(x >= 0.0 && x <= mesh.span)) {
    throw std::out_of_range(fmt::format("deflection_at: x = {} outside [0, {}]", x, mesh.span));
  }
  const double s = x / mesh.element_length();
  const int e = std::min(static_cast<int>(std::floor(s)), mesh.elements - 1);
  const double t = s - e;
  return (1.0 - t) * solution.w(e) + t * solution.w(e + 1);
}

InterfaceTractions interface_tractions(const Solution& solution, const BeamModel& model) {
  InterfaceTractions out;
  const int interfaces = static_cast<int>(model.section.interface_count());
  const int nodes = model.mesh.node_count();
  const double length = model.mesh.element_length();
  const double b = model.section.width;
  out.lambda.assign(static_cast<std::size_t>(interfaces), std::vector<double>(static_cast<std::size_t>(nodes)));
  out.traction = out.lambda;
  for (int i = 0; i < interfaces; ++i) {
    for (int j = 0; j < nodes; ++j) {
      const double tributary = (j == 0 || j == nodes - 1) ? 0.5 * length : length;
      const double lam = solution.lambda(i, j);
      out.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lam;
      out.traction[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lam / (tributary * b);
    }
  }
  return out;
}

ExtremeFiber max_extreme_fiber(const ElementFields& fields, const std::vector<std::size_t>& layers) {
  ExtremeFiber out;
  for (std::size_t li : layers) {
    const int i = static_cast<int>(li);
    for (int e = 0; e < fields.elements(); ++e) {
      const auto& f = fields.at(e, i);
      for (double eps : {f.eps_top_a, f.eps_bot_a, f.eps_top_b, f.eps_bot_b}) out.strain = std::max(out.strain, std::abs(eps));
      for (double sig : {f.sig_top_a, f.sig_bot_a, f.sig_top_b, f.sig_bot_b}) {
        if (std::abs(sig) > out.stress) {
          out.stress = std::abs(sig);
          out.element = e;
          out.layer = i;
        }
      }
    }
  }
  return out;
}

NodalFields nodal_averages(const ElementFields& fields) {
  const int n_el = fields.elements();
  const int nodes = n_el + 1;
  NodalFields out;
  const auto blank = std::vector<std::vector<double>>(static_cast<std::size_t>(fields.layers()),
                                                      std::vector<double>(static_cast<std::size_t>(nodes), 0.0));
  out.N = out.V = out.M = out.sig_top = out.sig_bot = blank;

  for (int i = 0; i < fields.layers(); ++i) {
    const auto li = static_cast<std::size_t>(i);
    for (int j = 0; j < nodes; ++j) {
      const auto lj = static_cast<std::size_t>(j);
      // End-a values of the right element and end-b values of the left one.
      double n = 0.0, v = 0.0, m = 0.0, st = 0.0, sb = 0.0;
      int count = 0;
      if (j > 0) {
        const auto& f = fields.at(j - 1, i);
        n += f.N, v += f.V, m += f.M_b, st += f.sig_top_b, sb += f.sig_bot_b;
        ++count;
      }
      if (j < n_el) {
        const auto& f = fields.at(j, i);
        n += f.N, v += f.V, m += f.M_a, st += f.sig_top_a, sb += f.sig_bot_a;
        ++count;
      }
      out.N[li][lj] = n / count;
      out.V[li][lj] = v / count;
      out.M[li][lj] = m / count;
      out.sig_top[li][lj] = st / count;
      out.sig_bot[li][lj] = sb / count;
    }
  }
  return out;
}

}  // namespace lamglass
