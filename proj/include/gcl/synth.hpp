#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gcl/blueprint.hpp"
#include "gcl/decide.hpp"
#include "gcl/model.hpp"

namespace gcl {

/// An internal invariant of the construction failed. Never expected; signals
/// a bug in normalization, decision or gluing.
class SynthesisError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Supplies a pointed X-model satisfying a listed formula.
using ModelProvider = std::function<PointedModel(const Formula&)>;

/// Glues a model realizing `bp` and `gamma` around a fresh root "s0".
///
/// For every performable profile and every formula it lists, the provider's
/// model is copied in with its states and actions renamed to
/// "<profile>#<k>#<original>" (k is the formula's position in the listing),
/// and the root's outcome for that profile is the set of copied roots.
/// Every other outcome at the root, and every mixed-alphabet outcome inside a
/// copy, is empty. The root is labeled with the positive atoms of `gamma`.
///
/// Throws std::invalid_argument if `bp` is not X-regular in its frame
/// conditions (seriality, independence, determinism) or `gamma` holds a
/// complementary pair.
PointedModel realize(const Blueprint& bp, const std::set<Literal>& gamma, const ModelProvider& provider,
                     const LogicId& x);

/// First failed realization condition of `pm` for the blueprint `bp` built
/// from `sc`, or nullopt. Checked at the root: the base actions exist with
/// their blueprint names; available_actions(root, C) equals PJA_C for every C;
/// the root satisfies gamma; each sigma_{A_i} (A_i playing action i) is
/// available and ensures phi_i; every available sigma_{B_j} enables ~psi_j;
/// and the root satisfies the whole conjunction.
std::optional<std::string> realization_violation(const PointedModel& pm, const Blueprint& bp,
                                                 const StandardConjunction& sc);

/// One-state model whose every profile loops back to the state. It has all
/// three frame properties.
PointedModel loop_model(int agents, const std::set<std::string>& labels);

struct SynthOptions {
  DecideOptions decide;
  /// Re-check the top-level result with validate_model and the model checker.
  bool verify = true;
  /// Check realization_violation on every glued model, not just the top.
  bool verify_realization = false;
};

/// Countermodel and model synthesis for one logic and agent count.
///
/// Satisfying models are built recursively: depth-0 formulas get a loop model
/// labeled by a satisfying valuation; deeper formulas are negated and
/// normalized, a clause without a reduction witness is negated into a
/// standard conjunction, and the model is realized from that conjunction's
/// blueprint with submodels for the (shallower) listed formulas.
class Synthesizer {
 public:
  Synthesizer(LogicId x, AgentCount agents, SynthOptions opts = {});

  /// A pointed X-model of `f`, or nullopt when `f` is not X-satisfiable.
  std::optional<PointedModel> synthesize(const Formula& f);

  /// A pointed X-model of a formula already known to be satisfiable.
  PointedModel model_of(const Formula& f);

  /// The standard conjunction realized for `f` (depth >= 1, satisfiable).
  StandardConjunction realized_conjunction(const Formula& f);

  Decider& decider() noexcept { return decider_; }

 private:
  LogicId logic_;
  int agents_;
  SynthOptions opts_;
  Decider decider_;
  std::unordered_map<Formula, PointedModel, FormulaHash> cache_;
};

std::optional<PointedModel> synthesize(const Formula& f, const LogicId& x, AgentCount agents,
                                       const SynthOptions& opts = {});

}  // namespace gcl
