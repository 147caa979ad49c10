#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "lamglass/benchmark.hpp"
#include "lamglass/errors.hpp"
#include "lamglass/model.hpp"
#include "lamglass/model_io.hpp"

using namespace lamglass;
using nlohmann::json;

namespace {

json bench_doc() {
  return json::parse(R"({
    "section": {
      "layers": [
        {"name": "glass", "E": 64.5e9, "nu": 0.23, "h": 5e-3},
        {"name": "PVB", "E": 1.287e6, "nu": 0.4, "h": 0.38e-3},
        {"name": "glass", "E": 64.5e9, "nu": 0.23, "h": 5e-3}
      ],
      "width": 0.1
    },
    "mesh": {"span": 0.8, "n_elements": 60},
    "supports": [{"node": 0, "dof": "w"}, {"node": 60, "dof": "w"}, {"node": 0, "dof": "u", "layer": 2}],
    "loads": {"point": [{"node": 30, "P": 50.0}]}
  })");
}

std::string validation_message(const json& doc) {
  try {
    build_model(doc);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("shear modulus of the benchmark constituents") {
  CHECK(shear_modulus(64.5e9, 0.23) == doctest::Approx(26.2195e9).epsilon(1e-5));
  CHECK(shear_modulus(1.287e6, 0.4) == doctest::Approx(0.4596e6).epsilon(1e-4));
  CHECK(shear_modulus(2.0, 0.0) == 1.0);
}

TEST_CASE("shear modulus rejects non-physical constants") {
  CHECK_THROWS_AS(shear_modulus(0.0, 0.2), std::domain_error);
  CHECK_THROWS_AS(shear_modulus(-1.0, 0.2), std::domain_error);
  CHECK_THROWS_AS(shear_modulus(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(shear_modulus(1.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(shear_modulus(std::nan(""), 0.2), std::domain_error);
}

TEST_CASE("benchmark document builds a 3-layer, 61-node model") {
  const auto model = build_model(bench_doc());
  CHECK(model.section.layer_count() == 3);
  CHECK(model.mesh.node_count() == 61);
  CHECK(model.section.k_shear == doctest::Approx(5.0 / 6.0));
  CHECK(model.supports[2].dof == SupportDof::U);
  CHECK(model.supports[2].layer == 1);
  CHECK(model.section.area(0) == doctest::Approx(5.0e-4).epsilon(1e-12));
  CHECK(model.section.inertia(0) == doctest::Approx(1.0417e-9).epsilon(1e-4));
  CHECK(model == benchmark::full_model(50.0));
}

TEST_CASE("shipped benchmark file matches the embedded model") {
  const auto model = load_model(LAMGLASS_SOURCE_DIR "/data/bench.json");
  CHECK(model == benchmark::full_model(50.0));
}

TEST_CASE("single-layer, two-element model is valid and has no interfaces") {
  auto doc = bench_doc();
  doc["section"]["layers"] = json::array({doc["section"]["layers"][0]});
  doc["mesh"]["n_elements"] = 2;
  doc["supports"] = json::parse(R"([{"node": 0, "dof": "w"}, {"node": 2, "dof": "w"}, {"node": 0, "dof": "u", "layer": 1}])");
  doc["loads"]["point"][0]["node"] = 1;
  const auto model = build_model(doc);
  CHECK(model.section.interface_count() == 0);
  CHECK(model.mesh.node_count() == 3);
}

TEST_CASE("validation names the violated invariant") {
  SUBCASE("zero thickness") {
    auto doc = bench_doc();
    doc["section"]["layers"][1]["h"] = 0.0;
    CHECK(validation_message(doc).find("layer 2 thickness") != std::string::npos);
  }
  SUBCASE("missing key") {
    auto doc = bench_doc();
    doc.erase("mesh");
    CHECK(validation_message(doc).find("'mesh'") != std::string::npos);
  }
  SUBCASE("too few elements") {
    auto doc = bench_doc();
    doc["mesh"]["n_elements"] = 1;
    CHECK(validation_message(doc).find("at least 2 elements") != std::string::npos);
  }
  SUBCASE("no deflection support") {
    auto doc = bench_doc();
    doc["supports"] = json::parse(R"([{"node": 0, "dof": "u", "layer": 2}])");
    CHECK(validation_message(doc).find("w support") != std::string::npos);
  }
  SUBCASE("support node out of range") {
    auto doc = bench_doc();
    doc["supports"][1]["node"] = 61;
    CHECK(validation_message(doc).find("outside mesh") != std::string::npos);
  }
  SUBCASE("layer on a w support") {
    auto doc = bench_doc();
    doc["supports"][0]["layer"] = 1;
    CHECK(validation_message(doc).find("only meaningful") != std::string::npos);
  }
  SUBCASE("u support without a valid layer") {
    auto doc = bench_doc();
    doc["supports"][2]["layer"] = 4;
    CHECK(validation_message(doc).find("layer 4 outside") != std::string::npos);
  }
  SUBCASE("duplicate support") {
    auto doc = bench_doc();
    doc["supports"].push_back(doc["supports"][0]);
    CHECK(validation_message(doc).find("fixed twice") != std::string::npos);
  }
  SUBCASE("Poisson ratio") {
    auto doc = bench_doc();
    doc["section"]["layers"][0]["nu"] = 0.5;
    CHECK(validation_message(doc).find("Poisson") != std::string::npos);
  }
  SUBCASE("shear correction factor") {
    auto doc = bench_doc();
    doc["section"]["k_shear"] = 1.5;
    CHECK(validation_message(doc).find("k_shear") != std::string::npos);
  }
  SUBCASE("load node out of range") {
    auto doc = bench_doc();
    doc["loads"]["point"][0]["node"] = 70;
    CHECK(validation_message(doc).find("loads.point[0]") != std::string::npos);
  }
  SUBCASE("wrong type") {
    auto doc = bench_doc();
    doc["section"]["width"] = "wide";
    CHECK(validation_message(doc).find("expected a number") != std::string::npos);
  }
  SUBCASE("no layers") {
    auto doc = bench_doc();
    doc["section"]["layers"] = json::array();
    CHECK(validation_message(doc).find("at least one layer") != std::string::npos);
  }
}

TEST_CASE("missing model file is an I/O error, not a validation error") {
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), std::runtime_error);
  try {
    load_model("/nonexistent/model.json");
  } catch (const ValidationError&) {
    FAIL("I/O failure reported as validation error");
  } catch (const std::runtime_error&) {
  }
}

TEST_CASE("uniform mesh arithmetic") {
  for (int n : {2, 3, 7, 60, 61, 120, 997}) {
    for (double L : {0.8, 1.0, 0.3, 12.345}) {
      const Mesh1D mesh{L, n};
      const double total = mesh.element_length() * n;
      CHECK(std::abs(total - L) <= std::numeric_limits<double>::epsilon() * L);
      CHECK(mesh.node_x(n) == L);
      for (int j = 1; j <= n; ++j) CHECK(mesh.node_x(j) > mesh.node_x(j - 1));
    }
  }
}

TEST_CASE("centroid offsets of a symmetric stack") {
  const auto z = benchmark::section().centroid_offsets();
  REQUIRE(z.size() == 3);
  CHECK(z[0] == doctest::Approx(-2.69e-3));
  CHECK(z[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(z[2] == doctest::Approx(2.69e-3));
  CHECK(benchmark::section().ply_indices() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("element-count override remaps nodes") {
  const auto model = benchmark::full_model(50.0);
  const auto coarse = with_elements(model, 4);
  CHECK(coarse.mesh.elements == 4);
  CHECK(coarse.supports[1].node == 4);
  CHECK(coarse.load.point[0].node == 2);
  CHECK_THROWS_AS(with_elements(model, 7), ValidationError);
  CHECK_THROWS_AS(with_elements(model, 1), ValidationError);
}

TEST_CASE("serialization round trip reproduces random models") {
  std::mt19937 rng(20241014);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    BeamModel m;
    const int layers = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < layers; ++i) {
      m.section.layers.push_back(
          {{"mat" + std::to_string(i), std::pow(10.0, 5.0 + 6.0 * unit(rng)), -0.9 + 1.39 * unit(rng)},
           1e-4 + 1e-2 * unit(rng)});
    }
    m.section.width = 0.01 + unit(rng);
    m.section.k_shear = 0.1 + 0.9 * unit(rng);
    m.mesh = {0.1 + 5.0 * unit(rng), 2 + static_cast<int>(rng() % 100)};
    m.supports.push_back({0, SupportDof::W, 0});
    m.supports.push_back({m.mesh.elements, SupportDof::W, 0});
    m.supports.push_back({static_cast<int>(rng() % m.mesh.node_count()), SupportDof::U,
                          static_cast<int>(rng() % layers)});
    m.supports.push_back({static_cast<int>(rng() % m.mesh.node_count()), SupportDof::Phi,
                          static_cast<int>(rng() % layers)});
    m.load.point.push_back({static_cast<int>(rng() % m.mesh.node_count()), 1000.0 * (unit(rng) - 0.5)});
    if (trial % 2 == 0)
      m.load.distributed.push_back({static_cast<int>(rng() % layers), unit(rng) - 0.5, 100.0 * unit(rng)});
    if (m.supports[2] == m.supports[3]) continue;
    validate(m);

    const auto text = to_json(m).dump();
    const auto back = build_model(json::parse(text));
    CHECK(back == m);
  }
}

TEST_CASE("load scaling") {
  auto model = benchmark::full_model(50.0);
  model.load.distributed.push_back({0, 1.0, 2.0});
  const auto scaled = scaled_loads(model, 3.0);
  CHECK(scaled.load.point[0].P == 150.0);
  CHECK(scaled.load.distributed[0].fz == 6.0);
  CHECK(model.load.total_vertical(0.8) == doctest::Approx(50.0 + 1.6));
}
