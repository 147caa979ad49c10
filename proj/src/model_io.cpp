#include "lamglass/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "lamglass/errors.hpp"

namespace lamglass {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(fmt::format("{}: missing key '{}'", where, key));
  }
  return obj.at(key);
}

double number(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number()) throw ValidationError(fmt::format("{}.{}: expected a number", where, key));
  return v.get<double>();
}

int integer(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number_integer()) throw ValidationError(fmt::format("{}.{}: expected an integer", where, key));
  return v.get<int>();
}

const json& array(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_array()) throw ValidationError(fmt::format("{}.{}: expected an array", where, key));
  return v;
}

SupportDof parse_dof(const json& v, const std::string& where) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "w") return SupportDof::W;
    if (s == "u") return SupportDof::U;
    if (s == "phi") return SupportDof::Phi;
  }
  throw ValidationError(fmt::format("{}.dof: expected \"w\", \"u\" or \"phi\"", where));
}

}  // namespace

std::string to_string(SupportDof dof) {
  switch (dof) {
    case SupportDof::W: return "w";
    case SupportDof::U: return "u";
    case SupportDof::Phi: return "phi";
  }
  return "?";
}

namespace {

BeamModel parse_model(const json& doc) {
  BeamModel model;

  const auto& section = require(doc, "section", "document");
  const auto& layers = array(section, "layers", "section");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto where = fmt::format("section.layers[{}]", i);
    Layer layer;
    if (layers[i].contains("name")) layer.material.name = layers[i].at("name").get<std::string>();
    layer.material.E = number(layers[i], "E", where);
    layer.material.nu = number(layers[i], "nu", where);
    layer.h = number(layers[i], "h", where);
    model.section.layers.push_back(std::move(layer));
  }
  model.section.width = number(section, "width", "section");
  if (section.contains("k_shear")) model.section.k_shear = number(section, "k_shear", "section");

  const auto& mesh = require(doc, "mesh", "document");
  model.mesh.span = number(mesh, "span", "mesh");
  model.mesh.elements = integer(mesh, "n_elements", "mesh");

  const auto& supports = array(doc, "supports", "document");
  for (std::size_t k = 0; k < supports.size(); ++k) {
    const auto where = fmt::format("supports[{}]", k);
    Support s;
    s.node = integer(supports[k], "node", where);
    s.dof = parse_dof(require(supports[k], "dof", where), where);
    if (s.dof != SupportDof::W) {
      s.layer = integer(supports[k], "layer", where) - 1;
    } else if (supports[k].contains("layer")) {
      throw ValidationError(where + ": a layer index is only meaningful for u and phi supports");
    }
    model.supports.push_back(s);
  }

  const auto& loads = require(doc, "loads", "document");
  if (loads.contains("point")) {
    const auto& point = array(loads, "point", "loads");
    for (std::size_t k = 0; k < point.size(); ++k) {
      const auto where = fmt::format("loads.point[{}]", k);
      model.load.point.push_back({integer(point[k], "node", where), number(point[k], "P", where)});
    }
  }
  if (loads.contains("distributed")) {
    const auto& dist = array(loads, "distributed", "loads");
    for (std::size_t k = 0; k < dist.size(); ++k) {
      const auto where = fmt::format("loads.distributed[{}]", k);
      DistributedLoad d;
      d.layer = integer(dist[k], "layer", where) - 1;
      d.fx = dist[k].contains("fx") ? number(dist[k], "fx", where) : 0.0;
      d.fz = dist[k].contains("fz") ? number(dist[k], "fz", where) : 0.0;
      model.load.distributed.push_back(d);
    }
  }

  return model;
}

}  // namespace

BeamModel build_model(const json& doc) {
  BeamModel model;
  try {
    model = parse_model(doc);
  } catch (const json::exception& e) {
    throw ValidationError(fmt::format("malformed model document: {}", e.what()));
  }
  validate(model);
  return model;
}

json to_json(const BeamModel& model) {
  json layers = json::array();
  for (const auto& layer : model.section.layers) {
    layers.push_back({{"name", layer.material.name}, {"E", layer.material.E}, {"nu", layer.material.nu},
                      {"h", layer.h}});
  }
  json supports = json::array();
  for (const auto& s : model.supports) {
    json entry = {{"node", s.node}, {"dof", to_string(s.dof)}};
    if (s.dof != SupportDof::W) entry["layer"] = s.layer + 1;
    supports.push_back(std::move(entry));
  }
  json point = json::array();
  for (const auto& p : model.load.point) point.push_back({{"node", p.node}, {"P", p.P}});
  json loads = {{"point", point}};
  if (!model.load.distributed.empty()) {
    json dist = json::array();
    for (const auto& d : model.load.distributed) dist.push_back({{"layer", d.layer + 1}, {"fx", d.fx}, {"fz", d.fz}});
    loads["distributed"] = std::move(dist);
  }
  return {
      {"section", {{"layers", layers}, {"width", model.section.width}, {"k_shear", model.section.k_shear}}},
      {"mesh", {{"span", model.mesh.span}, {"n_elements", model.mesh.elements}}},
      {"supports", supports},
      {"loads", loads},
  };
}

BeamModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open model file '{}'", path.string()));
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(fmt::format("{}: not a valid JSON document ({})", path.string(), e.what()));
  }
  return build_model(doc);
}

}  // namespace lamglass
