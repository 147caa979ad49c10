#include "lamglass/bounds.hpp"

#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "lamglass/errors.hpp"

namespace lamglass {

namespace {

BoundResult simply_supported(BoundCase kind, double P, double L, double EI, double kGA) {
  BoundResult out;
  out.kind = kind;
  out.EI = EI;
  out.kGA = kGA;
  out.deflection = P * L * L * L / (48.0 * EI) + P * L / (4.0 * kGA);
  return out;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::domain_error(fmt::format("{} must be positive (got {})", what, v));
}

void require_load(double P) {
  if (!(P >= 0.0)) throw std::domain_error(fmt::format("load P must be non-negative (got {})", P));
}

}  // namespace

BoundResult monolithic_deflection(double P, double L, double h_total, double b, double E, double G, double k) {
  require_load(P);
  require_positive(L, "span L");
  require_positive(h_total, "thickness");
  require_positive(b, "width b");
  require_positive(E, "E");
  require_positive(G, "G");
  require_positive(k, "k");
  const double A = b * h_total;
  const double I = b * h_total * h_total * h_total / 12.0;
  return simply_supported(BoundCase::Monolithic, P, L, E * I, k * G * A);
}

BoundResult independent_layers_deflection(double P, double L, std::span<const PlyProperties> plies, double b,
                                          double k) {
  require_load(P);
  require_positive(L, "span L");
  require_positive(b, "width b");
  require_positive(k, "k");
  if (plies.empty()) throw std::domain_error("independent_layers_deflection: no plies");
  double EI = 0.0;
  double kGA = 0.0;
  for (const auto& ply : plies) {
    require_positive(ply.h, "ply thickness");
    require_positive(ply.E, "ply E");
    require_positive(ply.G, "ply G");
    EI += ply.E * b * ply.h * ply.h * ply.h / 12.0;
    kGA += k * ply.G * b * ply.h;
  }
  return simply_supported(BoundCase::Independent, P, L, EI, kGA);
}

BoundResult monolithic_bound(const LaminateSection& section, double P, double L) {
  const auto plies = section.ply_indices();
  if (plies.empty()) throw ValidationError("monolithic bound: section has no plies");
  const Material& first = section.layers[plies.front()].material;
  double h_total = 0.0;
  for (std::size_t i : plies) {
    const Material& m = section.layers[i].material;
    if (m.E != first.E || m.nu != first.nu) {
      throw ValidationError("monolithic bound: plies of different materials cannot be merged");
    }
    h_total += section.layers[i].h;
  }
  return monolithic_deflection(P, L, h_total, section.width, first.E, first.G(), section.k_shear);
}

BoundResult independent_bound(const LaminateSection& section, double P, double L) {
  std::vector<PlyProperties> plies;
  for (std::size_t i : section.ply_indices()) {
    const auto& layer = section.layers[i];
    plies.push_back({layer.h, layer.material.E, layer.material.G()});
  }
  return independent_layers_deflection(P, L, plies, section.width, section.k_shear);
}

}  // namespace lamglass
