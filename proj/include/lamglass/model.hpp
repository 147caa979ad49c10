#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lamglass {

/// Isotropic shear modulus G = E / (2 (1 + nu)).
/// Throws std::domain_error unless E > 0 and -1 < nu < 0.5.
double shear_modulus(double E, double nu);

struct Material {
  std::string name;
  double E = 0.0;   // [Pa]
  double nu = 0.0;  // [-]

  double G() const { return shear_modulus(E, nu); }

  bool operator==(const Material&) const = default;
};

struct Layer {
  Material material;
  double h = 0.0;  // thickness [m]

  bool operator==(const Layer&) const = default;
};

/// Ordered layer stack, index 0 on top. Local z of every layer points down,
/// towards the next layer of the stack.
struct LaminateSection {
  std::vector<Layer> layers;
  double width = 0.0;               // b [m]
  double k_shear = 5.0 / 6.0;       // shear correction factor

  std::size_t layer_count() const { return layers.size(); }
  std::size_t interface_count() const { return layers.empty() ? 0 : layers.size() - 1; }

  double area(std::size_t i) const { return width * layers[i].h; }
  double inertia(std::size_t i) const {
    const double h = layers[i].h;
    return width * h * h * h / 12.0;
  }
  double EA(std::size_t i) const { return layers[i].material.E * area(i); }
  double EI(std::size_t i) const { return layers[i].material.E * inertia(i); }
  double kGA(std::size_t i) const { return k_shear * layers[i].material.G() * area(i); }

  double total_thickness() const;
  std::vector<double> thicknesses() const;

  /// Offset of each layer midplane from the geometric centre of the stack,
  /// positive downwards.
  std::vector<double> centroid_offsets() const;

  /// Load-bearing plies: layers whose modulus is within three decades of the
  /// stiffest layer. The remaining layers are treated as interlayers.
  std::vector<std::size_t> ply_indices() const;

  bool operator==(const LaminateSection&) const = default;
};

/// Uniform 1D mesh over [0, span].
struct Mesh1D {
  double span = 0.0;   // L [m]
  int elements = 0;    // n_el

  int node_count() const { return elements + 1; }
  double element_length() const { return span / elements; }
  double node_x(int j) const { return j == elements ? span : span * j / elements; }

  bool operator==(const Mesh1D&) const = default;
};

enum class SupportDof { W, U, Phi };

/// A homogeneous constraint on one nodal unknown. `layer` is ignored for W.
struct Support {
  int node = 0;
  SupportDof dof = SupportDof::W;
  int layer = 0;

  bool operator==(const Support&) const = default;
};

struct PointLoad {
  int node = 0;
  double P = 0.0;  // [N], acts along +w (downwards)

  bool operator==(const PointLoad&) const = default;
};

/// Uniform line loads on one layer [N/m].
struct DistributedLoad {
  int layer = 0;
  double fx = 0.0;
  double fz = 0.0;

  bool operator==(const DistributedLoad&) const = default;
};

struct LoadCase {
  std::vector<PointLoad> point;
  std::vector<DistributedLoad> distributed;

  /// Sum of all vertical forces acting on a beam of the given span [N].
  double total_vertical(double span) const;

  bool operator==(const LoadCase&) const = default;
};

struct BeamModel {
  LaminateSection section;
  Mesh1D mesh;
  std::vector<Support> supports;
  LoadCase load;

  bool operator==(const BeamModel&) const = default;
};

/// Checks every model invariant, throwing ValidationError naming the first
/// one violated.
void validate(const BeamModel& model);

/// Copy of `model` on a mesh with `elements` elements. Node references of
/// supports and point loads are rescaled and must land exactly on a node.
BeamModel with_elements(const BeamModel& model, int elements);

/// Copy of `model` with every load multiplied by `factor`.
BeamModel scaled_loads(const BeamModel& model, double factor);

}  // namespace lamglass
