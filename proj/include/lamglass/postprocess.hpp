#pragma once

#include <cstddef>
#include <vector>

#include "lamglass/model.hpp"
#include "lamglass/solver.hpp"

namespace lamglass {

/// Resultants and extreme-fiber strains/stresses of one layer in one
/// element. "top" is the fiber at z = -h/2, "bot" at z = +h/2; index a/b is
/// the element end. Strains and the moment are constant along a linear
/// element, so a and b values coincide.
struct LayerElementFields {
  double N = 0.0;
  double V = 0.0;
  double M_a = 0.0;
  double M_b = 0.0;
  double eps_top_a = 0.0, eps_bot_a = 0.0, eps_top_b = 0.0, eps_bot_b = 0.0;
  double sig_top_a = 0.0, sig_bot_a = 0.0, sig_top_b = 0.0, sig_bot_b = 0.0;
};

class ElementFields {
 public:
  ElementFields(int elements, int layers)
      : elements_(elements), layers_(layers), data_(static_cast<std::size_t>(elements * layers)) {}

  int elements() const { return elements_; }
  int layers() const { return layers_; }

  LayerElementFields& at(int element, int layer) { return data_[index(element, layer)]; }
  const LayerElementFields& at(int element, int layer) const { return data_[index(element, layer)]; }

 private:
  std::size_t index(int element, int layer) const { return static_cast<std::size_t>(element * layers_ + layer); }

  int elements_;
  int layers_;
  std::vector<LayerElementFields> data_;
};

ElementFields internal_forces(const Solution& solution, const BeamModel& model);

/// Linear interpolation of nodal deflections. Throws std::out_of_range
/// outside [0, L].
double deflection_at(const Solution& solution, double x);

/// Interface multipliers and the shear traction they represent,
/// t = lambda / (tributary length * b), stored [interface][node].
struct InterfaceTractions {
  std::vector<std::vector<double>> lambda;    // [N]
  std::vector<std::vector<double>> traction;  // [Pa]
};

/// Empty for a single-layer model.
InterfaceTractions interface_tractions(const Solution& solution, const BeamModel& model);

struct ExtremeFiber {
  double strain = 0.0;  // max |eps|
  double stress = 0.0;  // max |sigma| [Pa]
  int element = -1;
  int layer = -1;
};

/// Maximum absolute extreme-fiber strain and stress over the given layers and
/// all elements; the location is that of the governing stress.
ExtremeFiber max_extreme_fiber(const ElementFields& fields, const std::vector<std::size_t>& layers);

/// Element quantities averaged to nodes (end nodes take their single
/// element), for tabulated output. Indexed [layer][node].
struct NodalFields {
  std::vector<std::vector<double>> N, V, M, sig_top, sig_bot;
};

NodalFields nodal_averages(const ElementFields& fields);

}  // namespace lamglass
