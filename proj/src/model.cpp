#include "lamglass/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "lamglass/errors.hpp"

namespace lamglass {

double shear_modulus(double E, double nu) {
  if (!(E > 0.0) || !(nu > -1.0 && nu < 0.5)) {
    throw std::domain_error(
        fmt::format("shear_modulus: need E > 0 and -1 < nu < 0.5 (got E = {}, nu = {})", E, nu));
  }
  return E / (2.0 * (1.0 + nu));
}

double LaminateSection::total_thickness() const {
  double t = 0.0;
  for (const auto& layer : layers) t += layer.h;
  return t;
}

std::vector<double> LaminateSection::thicknesses() const {
  std::vector<double> h;
  h.reserve(layers.size());
  for (const auto& layer : layers) h.push_back(layer.h);
  return h;
}

std::vector<double> LaminateSection::centroid_offsets() const {
  std::vector<double> z(layers.size());
  const double half = 0.5 * total_thickness();
  double top = 0.0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    z[i] = top + 0.5 * layers[i].h - half;
    top += layers[i].h;
  }
  return z;
}

std::vector<std::size_t> LaminateSection::ply_indices() const {
  double stiffest = 0.0;
  for (const auto& layer : layers) stiffest = std::max(stiffest, layer.material.E);
  std::vector<std::size_t> plies;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].material.E >= 1e-3 * stiffest) plies.push_back(i);
  }
  return plies;
}

double LoadCase::total_vertical(double span) const {
  double total = 0.0;
  for (const auto& p : point) total += p.P;
  for (const auto& d : distributed) total += d.fz * span;
  return total;
}

namespace {

void fail(const std::string& msg) { throw ValidationError(msg); }

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void validate(const BeamModel& model) {
  const auto& s = model.section;
  if (s.layers.empty()) fail("section: at least one layer is required");
  if (!(s.width > 0.0) || !finite(s.width)) fail(fmt::format("section: width must be > 0 (got {})", s.width));
  if (!(s.k_shear > 0.0 && s.k_shear <= 1.0))
    fail(fmt::format("section: k_shear must lie in (0, 1] (got {})", s.k_shear));
  for (std::size_t i = 0; i < s.layers.size(); ++i) {
    const auto& layer = s.layers[i];
    if (!(layer.h > 0.0) || !finite(layer.h))
      fail(fmt::format("section: layer {} thickness h must be > 0 (got {})", i + 1, layer.h));
    if (!(layer.material.E > 0.0) || !finite(layer.material.E))
      fail(fmt::format("section: layer {} Young's modulus E must be > 0 (got {})", i + 1, layer.material.E));
    if (!(layer.material.nu > -1.0 && layer.material.nu < 0.5))
      fail(fmt::format("section: layer {} Poisson's ratio must lie in (-1, 0.5) (got {})", i + 1,
                       layer.material.nu));
  }

  const auto& m = model.mesh;
  if (!(m.span > 0.0) || !finite(m.span)) fail(fmt::format("mesh: span must be > 0 (got {})", m.span));
  if (m.elements < 2) fail(fmt::format("mesh: at least 2 elements are required (got {})", m.elements));

  const int n_layers = static_cast<int>(s.layers.size());
  const auto node_ok = [&](int node) { return node >= 0 && node < m.node_count(); };

  bool has_w = false;
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t k = 0; k < model.supports.size(); ++k) {
    const auto& sup = model.supports[k];
    if (!node_ok(sup.node))
      fail(fmt::format("supports[{}]: node {} outside mesh (0..{})", k, sup.node, m.elements));
    if (sup.dof == SupportDof::W) {
      has_w = true;
    } else if (sup.layer < 0 || sup.layer >= n_layers) {
      fail(fmt::format("supports[{}]: layer {} outside section (1..{})", k, sup.layer + 1, n_layers));
    }
    const int layer = sup.dof == SupportDof::W ? 0 : sup.layer;
    if (!seen.emplace(sup.node, static_cast<int>(sup.dof), layer).second)
      fail(fmt::format("supports[{}]: the same degree of freedom is fixed twice", k));
  }
  if (!has_w) fail("supports: at least one w support is required");

  for (std::size_t k = 0; k < model.load.point.size(); ++k) {
    const auto& p = model.load.point[k];
    if (!node_ok(p.node))
      fail(fmt::format("loads.point[{}]: node {} outside mesh (0..{})", k, p.node, m.elements));
    if (!finite(p.P)) fail(fmt::format("loads.point[{}]: P must be finite", k));
  }
  for (std::size_t k = 0; k < model.load.distributed.size(); ++k) {
    const auto& d = model.load.distributed[k];
    if (d.layer < 0 || d.layer >= n_layers)
      fail(fmt::format("loads.distributed[{}]: layer {} outside section (1..{})", k, d.layer + 1, n_layers));
    if (!finite(d.fx) || !finite(d.fz)) fail(fmt::format("loads.distributed[{}]: fx, fz must be finite", k));
  }
}

BeamModel with_elements(const BeamModel& model, int elements) {
  if (elements < 2) throw ValidationError(fmt::format("mesh: at least 2 elements are required (got {})", elements));
  BeamModel out = model;
  out.mesh.elements = elements;
  const long old_n = model.mesh.elements;
  const auto remap = [&](int node, const char* what) {
    const long scaled = static_cast<long>(node) * elements;
    if (scaled % old_n != 0) {
      throw ValidationError(fmt::format("{} at node {} of {} elements has no matching node on a {}-element mesh",
                                        what, node, old_n, elements));
    }
    return static_cast<int>(scaled / old_n);
  };
  for (auto& s : out.supports) s.node = remap(s.node, "support");
  for (auto& p : out.load.point) p.node = remap(p.node, "point load");
  return out;
}

BeamModel scaled_loads(const BeamModel& model, double factor) {
  BeamModel out = model;
  for (auto& p : out.load.point) p.P *= factor;
  for (auto& d : out.load.distributed) {
    d.fx *= factor;
    d.fz *= factor;
  }
  return out;
}

}  // namespace lamglass
