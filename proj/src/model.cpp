#include <algorithm>
#include <sstream>

#include "gcl/model.hpp"

namespace gcl {

JointAction::JointAction(Coalition c, std::vector<ActionId> slots)
    : coalition_(c), slots_(std::move(slots)) {
  if (c.bound() > static_cast<int>(slots_.size())) {
    throw std::invalid_argument("joint action slots shorter than its coalition");
  }
  for (std::size_t a = 0; a < slots_.size(); ++a) {
    if (!c.contains(static_cast<Agent>(a))) {
      slots_[a] = kNoAction;
    } else if (slots_[a] == kNoAction) {
      throw std::invalid_argument("joint action leaves a coalition member without an action");
    }
  }
}

JointAction JointAction::restriction(const Profile& profile, Coalition c) {
  return JointAction(c, profile);
}

bool JointAction::extended_by(const Profile& profile) const noexcept {
  for (std::size_t a = 0; a < slots_.size(); ++a) {
    if (slots_[a] != kNoAction && (a >= profile.size() || profile[a] != slots_[a])) return false;
  }
  return true;
}

JointAction JointAction::restricted_to(Coalition c) const {
  if (!c.subset_of(coalition_)) throw std::invalid_argument("restriction to a non-subcoalition");
  return JointAction(c, slots_);
}

JointAction JointAction::merged_with(const JointAction& other) const {
  if (!coalition_.disjoint(other.coalition_)) {
    throw std::invalid_argument("merging joint actions of overlapping coalitions");
  }
  std::vector<ActionId> slots = slots_;
  slots.resize(std::max(slots.size(), other.slots_.size()), kNoAction);
  for (std::size_t a = 0; a < other.slots_.size(); ++a) {
    if (other.slots_[a] != kNoAction) slots[a] = other.slots_[a];
  }
  return JointAction(coalition_ | other.coalition_, std::move(slots));
}

Model::Model(int agents, std::vector<std::string> actions, std::vector<std::string> states)
    : agents_(agents), actions_(std::move(actions)), states_(std::move(states)) {
  if (agents_ < 1 || agents_ > kMaxAgents) throw ModelError("agent count out of range");
  if (actions_.empty()) throw ModelError("model needs at least one action");
  if (states_.empty()) throw ModelError("model needs at least one state");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!state_index_.emplace(states_[i], static_cast<StateId>(i)).second) {
      throw ModelError("duplicate state '" + states_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (!action_index_.emplace(actions_[i], static_cast<ActionId>(i)).second) {
      throw ModelError("duplicate action '" + actions_[i] + "'");
    }
  }
  table_.resize(states_.size());
  labels_.resize(states_.size());
}

std::optional<StateId> Model::find_state(const std::string& name) const {
  auto it = state_index_.find(name);
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ActionId> Model::find_action(const std::string& name) const {
  auto it = action_index_.find(name);
  if (it == action_index_.end()) return std::nullopt;
  return it->second;
}

StateId Model::state_id(const std::string& name) const {
  if (auto s = find_state(name)) return *s;
  throw ModelError("unknown state '" + name + "'");
}

ActionId Model::action_id(const std::string& name) const {
  if (auto a = find_action(name)) return *a;
  throw ModelError("unknown action '" + name + "'");
}

void Model::check_state(StateId s) const {
  if (s < 0 || s >= num_states()) throw ModelError("state index " + std::to_string(s) + " out of range");
}

void Model::check_profile(const Profile& profile) const {
  if (static_cast<int>(profile.size()) != agents_) {
    throw ModelError("profile has " + std::to_string(profile.size()) + " actions, expected " +
                     std::to_string(agents_));
  }
  for (ActionId a : profile) {
    if (a < 0 || a >= num_actions()) throw ModelError("action index " + std::to_string(a) + " out of range");
  }
}

void Model::set_outcome(StateId s, const Profile& profile, std::vector<StateId> targets) {
  check_state(s);
  check_profile(profile);
  for (StateId t : targets) check_state(t);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  auto& row = table_[static_cast<std::size_t>(s)];
  if (targets.empty()) {
    row.erase(profile);
  } else {
    row[profile] = std::move(targets);
  }
}

bool Model::has_entry(StateId s, const Profile& profile) const {
  check_state(s);
  return table_[static_cast<std::size_t>(s)].count(profile) != 0;
}

const std::map<Profile, std::vector<StateId>>& Model::entries(StateId s) const {
  check_state(s);
  return table_[static_cast<std::size_t>(s)];
}

const std::vector<StateId>& Model::profile_outcome(StateId s, const Profile& profile) const {
  static const std::vector<StateId> kEmpty;
  const auto& row = entries(s);
  auto it = row.find(profile);
  return it == row.end() ? kEmpty : it->second;
}

std::size_t Model::num_entries() const noexcept {
  std::size_t n = 0;
  for (const auto& row : table_) n += row.size();
  return n;
}

void Model::add_label(StateId s, const std::string& atom) {
  check_state(s);
  labels_[static_cast<std::size_t>(s)].insert(atom);
  atoms_.insert(atom);
}

bool Model::operator==(const Model& other) const {
  return agents_ == other.agents_ && actions_ == other.actions_ && states_ == other.states_ &&
         table_ == other.table_ && labels_ == other.labels_ && atoms_ == other.atoms_;
}

std::vector<StateId> outcome(const Model& m, StateId s, const JointAction& a) {
  if (a.coalition().bound() > m.agents()) throw ModelError("joint action mentions unknown agents");
  for (ActionId act : a.slots()) {
    if (act != kNoAction && (act < 0 || act >= m.num_actions())) throw ModelError("unknown action in joint action");
  }
  std::vector<StateId> out;
  for (const auto& [profile, targets] : m.entries(s)) {
    if (a.extended_by(profile)) out.insert(out.end(), targets.begin(), targets.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<JointAction, std::vector<StateId>> coalition_outcomes(const Model& m, StateId s, Coalition c) {
  std::map<JointAction, std::vector<StateId>> out;
  for (const auto& [profile, targets] : m.entries(s)) {
    auto& acc = out[JointAction::restriction(profile, c)];
    acc.insert(acc.end(), targets.begin(), targets.end());
  }
  for (auto& [ja, targets] : out) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }
  return out;
}

std::vector<JointAction> available_actions(const Model& m, StateId s, Coalition c) {
  // A joint action is available iff some extending profile has a nonempty
  // entry, so the available set is the set of restrictions of listed profiles.
  std::set<JointAction> acc;
  for (const auto& entry : m.entries(s)) acc.insert(JointAction::restriction(entry.first, c));
  return {acc.begin(), acc.end()};
}

namespace {

std::optional<PropertyViolation> serial_violation(const Model& m) {
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (Coalition c : all_coalitions(m.agents())) {
      if (available_actions(m, s, c).empty()) return PropertyViolation{FrameProperty::Serial, s, {c}, {}};
    }
  }
  return std::nullopt;
}

std::optional<PropertyViolation> independence_violation(const Model& m) {
  const auto coalitions = all_coalitions(m.agents());
  for (StateId s = 0; s < m.num_states(); ++s) {
    std::vector<std::set<JointAction>> avail;
    avail.reserve(coalitions.size());
    for (Coalition c : coalitions) {
      auto v = available_actions(m, s, c);
      avail.emplace_back(v.begin(), v.end());
    }
    for (Coalition c : coalitions) {
      for (Coalition d : coalitions) {
        if (!c.disjoint(d)) continue;
        const auto& joined = avail[(c | d).mask()];
        for (const JointAction& a : avail[c.mask()]) {
          for (const JointAction& b : avail[d.mask()]) {
            if (joined.count(a.merged_with(b)) == 0) {
              return PropertyViolation{FrameProperty::Independent, s, {c, d}, {a, b}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PropertyViolation> determinism_violation(const Model& m) {
  const Coalition grand = Coalition::full(m.agents());
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (const auto& [profile, targets] : m.entries(s)) {
      if (targets.size() != 1) {
        return PropertyViolation{FrameProperty::Deterministic, s, {grand},
                                 {JointAction::restriction(profile, grand)}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PropertyViolation> find_violation(const Model& m, FrameProperty property) {
  switch (property) {
    case FrameProperty::Serial: return serial_violation(m);
    case FrameProperty::Independent: return independence_violation(m);
    case FrameProperty::Deterministic: return determinism_violation(m);
  }
  return std::nullopt;
}

FrameProperties frame_properties(const Model& m) {
  return FrameProperties{!serial_violation(m), !independence_violation(m), !determinism_violation(m)};
}

ValidationReport validate_model(const Model& m, const LogicId& x) {
  const std::pair<bool, FrameProperty> checks[] = {
      {x.serial, FrameProperty::Serial},
      {x.independent, FrameProperty::Independent},
      {x.deterministic, FrameProperty::Deterministic},
  };
  for (const auto& [wanted, property] : checks) {
    if (!wanted) continue;
    if (auto v = find_violation(m, property)) return ValidationReport{false, std::move(v)};
  }
  return ValidationReport{};
}

std::string to_string(FrameProperty p) {
  switch (p) {
    case FrameProperty::Serial: return "serial";
    case FrameProperty::Independent: return "independent";
    case FrameProperty::Deterministic: return "deterministic";
  }
  return "?";
}

std::string describe(const Model& m, const JointAction& a) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Agent ag : a.coalition().members()) {
    if (!first) out << ", ";
    out << ag << "->" << m.action_name(a.at(ag));
    first = false;
  }
  out << '}';
  return out.str();
}

namespace {

std::string coalition_text(Coalition c) {
  std::string out = "{";
  bool first = true;
  for (Agent a : c.members()) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string PropertyViolation::describe(const Model& m) const {
  std::ostringstream out;
  out << to_string(property) << " fails at state " << m.state_name(state) << ": ";
  switch (property) {
    case FrameProperty::Serial:
      out << "coalition " << coalition_text(coalitions.at(0)) << " has no available joint action";
      break;
    case FrameProperty::Independent:
      out << gcl::describe(m, joint_actions.at(0)) << " and " << gcl::describe(m, joint_actions.at(1))
          << " are available but their union is not";
      break;
    case FrameProperty::Deterministic:
      out << "profile " << gcl::describe(m, joint_actions.at(0)) << " has "
          << m.profile_outcome(state, joint_actions.at(0).slots()).size() << " outcome states";
      break;
  }
  return out.str();
}

}  // namespace gcl
