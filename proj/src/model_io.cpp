#include "gcl/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gcl {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ModelError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& value, const char* what) {
  if (!value.is_array()) throw ModelError(std::string("\"") + what + "\" must be an array");
  std::vector<std::string> out;
  for (const json& item : value) {
    if (!item.is_string()) throw ModelError(std::string("\"") + what + "\" must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

ModelFile parse_model(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed model file: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model file must hold a JSON object");

  const json& agents = require(doc, "agents");
  if (!agents.is_number_integer()) throw ModelError("\"agents\" must be an integer");
  Model m(agents.get<int>(), string_list(require(doc, "actions"), "actions"),
          string_list(require(doc, "states"), "states"));

  if (auto it = doc.find("atoms"); it != doc.end()) {
    for (const std::string& a : string_list(*it, "atoms")) m.declare_atom(a);
  }
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_object()) throw ModelError("\"labels\" must be an object");
    for (const auto& [state, atoms] : it->items()) {
      StateId s = m.state_id(state);
      for (const std::string& a : string_list(atoms, "labels")) m.add_label(s, a);
    }
  }
  if (auto it = doc.find("outcomes"); it != doc.end()) {
    if (!it->is_array()) throw ModelError("\"outcomes\" must be an array");
    std::set<std::pair<StateId, Profile>> seen;
    for (const json& entry : *it) {
      if (!entry.is_object()) throw ModelError("outcome entries must be objects");
      const json& state = require(entry, "state");
      if (!state.is_string()) throw ModelError("outcome \"state\" must be a string");
      StateId s = m.state_id(state.get<std::string>());
      Profile profile;
      for (const std::string& a : string_list(require(entry, "profile"), "profile")) {
        profile.push_back(m.action_id(a));
      }
      m.check_profile(profile);
      if (!seen.emplace(s, profile).second) {
        throw ModelError("duplicate outcome key for state '" + state.get<std::string>() + "'");
      }
      std::vector<StateId> targets;
      for (const std::string& t : string_list(require(entry, "to"), "to")) targets.push_back(m.state_id(t));
      m.set_outcome(s, profile, std::move(targets));
    }
  }

  ModelFile out{std::move(m), std::nullopt};
  if (auto it = doc.find("pointed"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw ModelError("\"pointed\" must be a state name");
    out.pointed = out.model.state_id(it->get<std::string>());
  }
  return out;
}

std::string format_model(const Model& m, std::optional<StateId> pointed) {
  json doc;
  doc["agents"] = m.agents();
  doc["actions"] = m.actions();
  doc["states"] = m.states();
  doc["atoms"] = json(std::vector<std::string>(m.atoms().begin(), m.atoms().end()));
  json labels = json::object();
  for (StateId s = 0; s < m.num_states(); ++s) {
    labels[m.state_name(s)] = std::vector<std::string>(m.labels(s).begin(), m.labels(s).end());
  }
  doc["labels"] = std::move(labels);
  json outcomes = json::array();
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (const auto& [profile, targets] : m.entries(s)) {
      json entry;
      entry["state"] = m.state_name(s);
      std::vector<std::string> acts;
      for (ActionId a : profile) acts.push_back(m.action_name(a));
      entry["profile"] = std::move(acts);
      std::vector<std::string> to;
      for (StateId t : targets) to.push_back(m.state_name(t));
      entry["to"] = std::move(to);
      outcomes.push_back(std::move(entry));
    }
  }
  doc["outcomes"] = std::move(outcomes);
  if (pointed) doc["pointed"] = m.state_name(*pointed);
  return doc.dump(2) + "\n";
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

void save_model(const Model& m, const std::filesystem::path& path, std::optional<StateId> pointed) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write model file " + path.string());
  out << format_model(m, pointed);
  if (!out) throw ModelError("failed writing model file " + path.string());
}

}  // namespace gcl
