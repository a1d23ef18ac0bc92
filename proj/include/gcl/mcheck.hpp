#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "gcl/formula.hpp"
#include "gcl/model.hpp"

namespace gcl {

/// Evaluates formulas on one model. Truth sets are computed globally, one
/// subformula at a time, and memoized for the evaluator's lifetime.
///
/// Unlabeled atoms are false. Throws ModelError if a formula mentions an
/// agent the model does not have.
class Evaluator {
 public:
  explicit Evaluator(const Model& m) : model_(m) {}

  bool satisfies(StateId s, const Formula& f);
  /// Truth value of `f` at every state.
  const std::vector<char>& truth(const Formula& f);
  bool valid(const Formula& f);

  /// Every outcome of `a` at `s` satisfies `f` (vacuously true when empty).
  bool ensures(StateId s, const JointAction& a, const Formula& f);
  /// Some outcome of `a` at `s` satisfies `f`.
  bool enables(StateId s, const JointAction& a, const Formula& f);

 private:
  const std::vector<std::map<JointAction, std::vector<StateId>>>& grouped(Coalition c);
  void check_agents(const Formula& f) const;

  const Model& model_;
  std::unordered_map<Formula, std::vector<char>, FormulaHash> memo_;
  std::map<Coalition, std::vector<std::map<JointAction, std::vector<StateId>>>> groups_;
};

bool satisfies(const Model& m, StateId s, const Formula& f);
bool ensures(const Model& m, StateId s, const JointAction& a, const Formula& f);
bool enables(const Model& m, StateId s, const JointAction& a, const Formula& f);
bool valid_on_model(const Model& m, const Formula& f);

}  // namespace gcl
