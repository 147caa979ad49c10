#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lamglass/model.hpp"

namespace lamglass {

/// Builds and validates a model from a document with keys `section`, `mesh`,
/// `supports` and `loads`. Layer indices in the document are 1-based, node
/// indices 0-based.
BeamModel build_model(const nlohmann::json& doc);

nlohmann::json to_json(const BeamModel& model);

/// Reads a model document from disk. Throws std::runtime_error on I/O failure.
BeamModel load_model(const std::filesystem::path& path);

std::string to_string(SupportDof dof);

}  // namespace lamglass
