#include "lamglass/benchmark.hpp"

#include <fmt/format.h>

#include "lamglass/errors.hpp"

namespace lamglass::benchmark {

Material glass() { return {"glass", 64.5e9, 0.23}; }

Material pvb() { return {"PVB", 1.287e6, 0.4}; }

LaminateSection section() {
  LaminateSection s;
  s.layers = {{glass(), kGlassThickness}, {pvb(), kInterlayerThickness}, {glass(), kGlassThickness}};
  s.width = kWidth;
  return s;
}

BeamModel full_model(double P, int elements, double span) {
  if (elements % 2 != 0) {
    throw ValidationError(fmt::format("benchmark: the load needs a midspan node, {} elements is odd", elements));
  }
  BeamModel m;
  m.section = section();
  m.mesh = {span, elements};
  m.supports = {
      {0, SupportDof::W, 0},
      {elements, SupportDof::W, 0},
      {0, SupportDof::U, 1},
  };
  m.load.point = {{elements / 2, P}};
  validate(m);
  return m;
}

BeamModel half_model(double P, int elements, double span) {
  BeamModel m;
  m.section = section();
  m.mesh = {0.5 * span, elements};
  m.supports.push_back({0, SupportDof::W, 0});
  for (int i = 0; i < static_cast<int>(m.section.layer_count()); ++i) {
    m.supports.push_back({elements, SupportDof::Phi, i});
  }
  m.supports.push_back({elements, SupportDof::U, 1});
  m.load.point = {{elements, 0.5 * P}};
  validate(m);
  return m;
}

}  // namespace lamglass::benchmark
