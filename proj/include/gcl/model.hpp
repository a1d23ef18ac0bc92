#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcl/coalition.hpp"
#include "gcl/logic_id.hpp"

namespace gcl {

using StateId = int;
using ActionId = int;
inline constexpr ActionId kNoAction = -1;

/// One action per agent, in agent order: a joint action of the grand coalition.
using Profile = std::vector<ActionId>;

/// Malformed model data: unknown names, dangling references, duplicate keys.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A joint action of a coalition. Slots are indexed by agent; agents outside
/// the coalition hold kNoAction.
class JointAction {
 public:
  JointAction() = default;
  JointAction(Coalition c, std::vector<ActionId> slots);

  /// The restriction of a full profile to `c`.
  static JointAction restriction(const Profile& profile, Coalition c);

  Coalition coalition() const noexcept { return coalition_; }
  ActionId at(Agent a) const { return slots_.at(static_cast<std::size_t>(a)); }
  const std::vector<ActionId>& slots() const noexcept { return slots_; }

  /// True iff this joint action is a subset of `profile` (sigma_C within sigma_AG).
  bool extended_by(const Profile& profile) const noexcept;
  JointAction restricted_to(Coalition c) const;
  /// Union with a joint action of a disjoint coalition.
  JointAction merged_with(const JointAction& other) const;

  auto operator<=>(const JointAction&) const = default;

 private:
  Coalition coalition_;
  std::vector<ActionId> slots_;
};

/// An explicit finite general concurrent game model.
///
/// The grand-coalition outcome table is sparse: a (state, profile) pair with
/// no entry has the empty outcome. Entries are never stored empty.
class Model {
 public:
  Model(int agents, std::vector<std::string> actions, std::vector<std::string> states);

  int agents() const noexcept { return agents_; }
  int num_states() const noexcept { return static_cast<int>(states_.size()); }
  int num_actions() const noexcept { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& actions() const noexcept { return actions_; }
  const std::string& state_name(StateId s) const { return states_.at(static_cast<std::size_t>(s)); }
  const std::string& action_name(ActionId a) const { return actions_.at(static_cast<std::size_t>(a)); }

  std::optional<StateId> find_state(const std::string& name) const;
  std::optional<ActionId> find_action(const std::string& name) const;
  /// Throws ModelError for unknown names.
  StateId state_id(const std::string& name) const;
  ActionId action_id(const std::string& name) const;

  /// Sets out_AG(s, profile). An empty target list removes the entry.
  void set_outcome(StateId s, const Profile& profile, std::vector<StateId> targets);
  bool has_entry(StateId s, const Profile& profile) const;
  /// Nonempty table entries at `s`, keyed by profile.
  const std::map<Profile, std::vector<StateId>>& entries(StateId s) const;
  /// out_AG(s, profile); empty when unlisted.
  const std::vector<StateId>& profile_outcome(StateId s, const Profile& profile) const;
  std::size_t num_entries() const noexcept;

  void add_label(StateId s, const std::string& atom);
  const std::set<std::string>& labels(StateId s) const { return labels_.at(static_cast<std::size_t>(s)); }
  bool has_label(StateId s, const std::string& atom) const { return labels(s).count(atom) != 0; }

  /// Atom universe: declared atoms plus every label in use.
  void declare_atom(const std::string& atom) { atoms_.insert(atom); }
  const std::set<std::string>& atoms() const noexcept { return atoms_; }

  void check_state(StateId s) const;
  void check_profile(const Profile& profile) const;

  bool operator==(const Model& other) const;

 private:
  int agents_;
  std::vector<std::string> actions_;
  std::vector<std::string> states_;
  std::map<std::string, StateId> state_index_;
  std::map<std::string, ActionId> action_index_;
  std::vector<std::map<Profile, std::vector<StateId>>> table_;
  std::vector<std::set<std::string>> labels_;
  std::set<std::string> atoms_;
};

/// A model with a distinguished state.
struct PointedModel {
  Model model;
  StateId state;
};

/// out_C(s, a): union of out_AG(s, p) over every profile p extending `a`.
std::vector<StateId> outcome(const Model& m, StateId s, const JointAction& a);

/// aja_C(s): joint actions of `c` with a nonempty outcome, in increasing order.
std::vector<JointAction> available_actions(const Model& m, StateId s, Coalition c);

/// Every available joint action of `c` at `s` together with its outcome set.
/// The map's keys are exactly available_actions(m, s, c).
std::map<JointAction, std::vector<StateId>> coalition_outcomes(const Model& m, StateId s, Coalition c);

struct FrameProperties {
  bool serial = false;
  bool independent = false;
  bool deterministic = false;

  bool satisfies(const LogicId& x) const noexcept {
    return (!x.serial || serial) && (!x.independent || independent) &&
           (!x.deterministic || deterministic);
  }
  bool operator==(const FrameProperties&) const = default;
};

enum class FrameProperty { Serial, Independent, Deterministic };

/// A failing instance of one frame property.
struct PropertyViolation {
  FrameProperty property;
  StateId state;
  /// Serial: the coalition without an available action. Independent: the two
  /// disjoint coalitions. Deterministic: the grand coalition.
  std::vector<Coalition> coalitions;
  /// Independent: the two available joint actions whose union is unavailable.
  /// Deterministic: the available profile with a non-singleton outcome.
  std::vector<JointAction> joint_actions;

  std::string describe(const Model& m) const;
};

struct ValidationReport {
  bool ok = true;
  std::optional<PropertyViolation> violation;
};

/// First violation of `property` in state order, coalition-mask order, then
/// joint-action order; nullopt when the property holds.
std::optional<PropertyViolation> find_violation(const Model& m, FrameProperty property);

FrameProperties frame_properties(const Model& m);

/// Checks the properties named by `x` in S, I, D order and reports the first
/// violation found.
ValidationReport validate_model(const Model& m, const LogicId& x);

std::string to_string(FrameProperty p);
std::string describe(const Model& m, const JointAction& a);

}  // namespace gcl
