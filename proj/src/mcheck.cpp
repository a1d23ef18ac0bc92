#include "gcl/mcheck.hpp"

namespace gcl {

void Evaluator::check_agents(const Formula& f) const {
  if (f.agents_mentioned().bound() > model_.agents()) {
    throw ModelError("formula mentions agent " + std::to_string(f.agents_mentioned().bound() - 1) +
                     " but the model has " + std::to_string(model_.agents()) + " agent(s)");
  }
}

const std::vector<std::map<JointAction, std::vector<StateId>>>& Evaluator::grouped(Coalition c) {
  auto it = groups_.find(c);
  if (it != groups_.end()) return it->second;
  std::vector<std::map<JointAction, std::vector<StateId>>> rows;
  rows.reserve(static_cast<std::size_t>(model_.num_states()));
  for (StateId s = 0; s < model_.num_states(); ++s) rows.push_back(coalition_outcomes(model_, s, c));
  return groups_.emplace(c, std::move(rows)).first->second;
}

const std::vector<char>& Evaluator::truth(const Formula& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  check_agents(f);
  const auto n = static_cast<std::size_t>(model_.num_states());
  std::vector<char> out(n, 0);
  switch (f.kind()) {
    case FormulaKind::Top:
      std::fill(out.begin(), out.end(), 1);
      break;
    case FormulaKind::Atom:
      for (std::size_t s = 0; s < n; ++s) out[s] = model_.has_label(static_cast<StateId>(s), f.atom_name());
      break;
    case FormulaKind::Not: {
      const auto& sub = truth(f.child());
      for (std::size_t s = 0; s < n; ++s) out[s] = !sub[s];
      break;
    }
    case FormulaKind::And: {
      const auto& lhs = truth(f.left());
      const auto& rhs = truth(f.right());
      for (std::size_t s = 0; s < n; ++s) out[s] = lhs[s] && rhs[s];
      break;
    }
    case FormulaKind::Coal: {
      const auto& sub = truth(f.child());
      const auto& rows = grouped(f.coal());
      for (std::size_t s = 0; s < n; ++s) {
        for (const auto& [ja, targets] : rows[s]) {
          bool all = true;
          for (StateId t : targets) all = all && sub[static_cast<std::size_t>(t)];
          if (all) {
            out[s] = 1;
            break;
          }
        }
      }
      break;
    }
  }
  return memo_.emplace(f, std::move(out)).first->second;
}

bool Evaluator::satisfies(StateId s, const Formula& f) {
  model_.check_state(s);
  return truth(f)[static_cast<std::size_t>(s)] != 0;
}

bool Evaluator::valid(const Formula& f) {
  for (char v : truth(f)) {
    if (!v) return false;
  }
  return true;
}

bool Evaluator::ensures(StateId s, const JointAction& a, const Formula& f) {
  const auto& t = truth(f);
  for (StateId u : outcome(model_, s, a)) {
    if (!t[static_cast<std::size_t>(u)]) return false;
  }
  return true;
}

bool Evaluator::enables(StateId s, const JointAction& a, const Formula& f) {
  const auto& t = truth(f);
  for (StateId u : outcome(model_, s, a)) {
    if (t[static_cast<std::size_t>(u)]) return true;
  }
  return false;
}

bool satisfies(const Model& m, StateId s, const Formula& f) { return Evaluator(m).satisfies(s, f); }

bool ensures(const Model& m, StateId s, const JointAction& a, const Formula& f) {
  return Evaluator(m).ensures(s, a, f);
}

bool enables(const Model& m, StateId s, const JointAction& a, const Formula& f) {
  return Evaluator(m).enables(s, a, f);
}

bool valid_on_model(const Model& m, const Formula& f) { return Evaluator(m).valid(f); }

}  // namespace gcl
