#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "gcl/model.hpp"

namespace gcl {

/// A model file's content: the model and, for synthesized models, the
/// distinguished state named by the "pointed" field.
struct ModelFile {
  Model model;
  std::optional<StateId> pointed;
};

/// Parses the JSON model format:
///
///   { "agents": 2, "actions": ["x","y"], "states": ["s0","s1"],
///     "atoms": ["p","q"], "labels": {"s0": ["p"], "s1": []},
///     "outcomes": [ {"state":"s0", "profile":["x","y"], "to":["s1"]} ],
///     "pointed": "s0" }
///
/// "atoms", "labels", "outcomes" and "pointed" are optional. Throws
/// ModelError on malformed input, duplicate (state, profile) keys and
/// dangling references.
ModelFile parse_model(const std::string& json_text);
std::string format_model(const Model& m, std::optional<StateId> pointed = std::nullopt);

ModelFile load_model(const std::filesystem::path& path);
void save_model(const Model& m, const std::filesystem::path& path,
                std::optional<StateId> pointed = std::nullopt);

}  // namespace gcl
