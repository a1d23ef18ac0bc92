#include "gcl/synth.hpp"

#include <map>

#include "gcl/mcheck.hpp"

namespace gcl {

namespace {

bool eval_propositional(const Formula& f, const std::map<std::string, bool>& val) {
  switch (f.kind()) {
    case FormulaKind::Top: return true;
    case FormulaKind::Atom: return val.at(f.atom_name());
    case FormulaKind::Not: return !eval_propositional(f.child(), val);
    case FormulaKind::And: return eval_propositional(f.left(), val) && eval_propositional(f.right(), val);
    case FormulaKind::Coal: break;
  }
  throw std::invalid_argument("modal formula in propositional evaluation");
}

// A satisfying valuation as the set of true atoms.
std::optional<std::set<std::string>> satisfying_valuation(const Formula& f) {
  const std::set<std::string> atoms = atoms_of(f);
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  if (names.size() > 30) throw CapExceeded("valuation search limited to 30 atoms");
  const std::uint64_t total = 1ULL << names.size();
  std::map<std::string, bool> val;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t k = 0; k < names.size(); ++k) val[names[k]] = (bits >> k) & 1ULL;
    if (eval_propositional(f, val)) {
      std::set<std::string> out;
      for (std::size_t k = 0; k < names.size(); ++k) {
        if ((bits >> k) & 1ULL) out.insert(names[k]);
      }
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

PointedModel loop_model(int agents, const std::set<std::string>& labels) {
  Model m(agents, {"a"}, {"s0"});
  m.set_outcome(0, Profile(static_cast<std::size_t>(agents), 0), {0});
  for (const std::string& p : labels) m.add_label(0, p);
  return PointedModel{std::move(m), 0};
}

PointedModel realize(const Blueprint& bp, const std::set<Literal>& gamma, const ModelProvider& provider,
                     const LogicId& x) {
  if (auto bad = regularity_violation(bp, x, {})) throw std::invalid_argument("blueprint is not regular: " + *bad);
  if (has_complementary_pair(gamma)) throw std::invalid_argument("gamma holds a complementary pair");

  struct Slot {
    Profile profile;
    std::string prefix;
    PointedModel sub;
  };
  std::vector<Slot> slots;
  for (const auto& [profile, items] : bp.listing) {
    for (std::size_t k = 0; k < items.size(); ++k) {
      PointedModel sub = provider(items[k]);
      if (sub.model.agents() != bp.agents) throw std::invalid_argument("submodel has the wrong agent count");
      slots.push_back(Slot{profile, describe_profile(bp, profile) + "#" + std::to_string(k) + "#", std::move(sub)});
    }
  }

  std::vector<std::string> states{"s0"};
  std::vector<std::string> actions = bp.base_actions;
  std::vector<int> state_offset, action_offset;
  for (const Slot& slot : slots) {
    state_offset.push_back(static_cast<int>(states.size()));
    action_offset.push_back(static_cast<int>(actions.size()));
    for (const std::string& s : slot.sub.model.states()) states.push_back(slot.prefix + s);
    for (const std::string& a : slot.sub.model.actions()) actions.push_back(slot.prefix + a);
  }

  Model glued(bp.agents, std::move(actions), std::move(states));
  for (const Literal& lit : gamma) {
    if (lit.positive) glued.add_label(0, lit.atom);
    glued.declare_atom(lit.atom);
  }

  std::map<Profile, std::vector<StateId>> root_out;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const Slot& slot = slots[k];
    const Model& sub = slot.sub.model;
    const int so = state_offset[k];
    const int ao = action_offset[k];
    root_out[slot.profile].push_back(so + slot.sub.state);
    for (StateId s = 0; s < sub.num_states(); ++s) {
      for (const std::string& p : sub.labels(s)) glued.add_label(so + s, p);
      for (const auto& [profile, targets] : sub.entries(s)) {
        Profile shifted = profile;
        for (ActionId& a : shifted) a += ao;
        std::vector<StateId> moved;
        moved.reserve(targets.size());
        for (StateId t : targets) moved.push_back(so + t);
        glued.set_outcome(so + s, shifted, std::move(moved));
      }
    }
    for (const std::string& p : sub.atoms()) glued.declare_atom(p);
  }
  for (auto& [profile, targets] : root_out) glued.set_outcome(0, profile, std::move(targets));
  return PointedModel{std::move(glued), 0};
}

std::optional<std::string> realization_violation(const PointedModel& pm, const Blueprint& bp,
                                                 const StandardConjunction& sc) {
  const Model& m = pm.model;
  const StateId root = pm.state;
  for (int a = 0; a < bp.num_base_actions(); ++a) {
    if (m.find_action(bp.base_actions[static_cast<std::size_t>(a)]) != std::optional<ActionId>(a)) {
      return "base action " + bp.base_actions[static_cast<std::size_t>(a)] + " missing";
    }
  }
  for (Coalition c : all_coalitions(bp.agents)) {
    const std::vector<JointAction> avail = available_actions(m, root, c);
    if (std::set<JointAction>(avail.begin(), avail.end()) != bp.performable(c)) {
      return "available joint actions differ from the performable ones";
    }
  }
  for (const Literal& lit : sc.gamma) {
    if (m.has_label(root, lit.atom) != lit.positive) return "root does not satisfy literal " + lit.atom;
  }
  Evaluator ev(m);
  for (std::size_t i = 0; i < sc.negatives.size(); ++i) {
    const ModalTerm& t = sc.negatives[i];
    std::vector<ActionId> slots(static_cast<std::size_t>(bp.agents), kNoAction);
    for (Agent a : t.coalition.members()) slots[static_cast<std::size_t>(a)] = bp.negative_action(static_cast<int>(i));
    const JointAction sigma(t.coalition, slots);
    if (outcome(m, root, sigma).empty()) return "negative index " + std::to_string(i + 1) + " has no available action";
    if (!ev.ensures(root, sigma, t.body)) return "negative index " + std::to_string(i + 1) + " is not ensured";
  }
  for (std::size_t j = 0; j < sc.positives.size(); ++j) {
    const ModalTerm& t = sc.positives[j];
    const Formula goal = Formula::negation(t.body);
    for (const JointAction& sigma : available_actions(m, root, t.coalition)) {
      if (!ev.enables(root, sigma, goal)) return "positive index " + std::to_string(j) + " is ensured";
    }
  }
  if (!ev.satisfies(root, sc_to_formula(sc))) return "root does not satisfy the conjunction";
  return std::nullopt;
}

Synthesizer::Synthesizer(LogicId x, AgentCount agents, SynthOptions opts)
    : logic_(x), agents_(agents.value()), opts_(opts), decider_(x, agents, opts.decide) {}

std::optional<PointedModel> Synthesizer::synthesize(const Formula& f) {
  if (!decider_.is_satisfiable(f)) return std::nullopt;
  PointedModel pm = model_of(f);
  if (opts_.verify) {
    const ValidationReport report = validate_model(pm.model, logic_);
    if (!report.ok) {
      throw SynthesisError("synthesized model breaks " + report.violation->describe(pm.model));
    }
    if (!satisfies(pm.model, pm.state, f)) {
      throw SynthesisError("synthesized model does not satisfy " + render(f));
    }
  }
  return pm;
}

StandardConjunction Synthesizer::realized_conjunction(const Formula& f) {
  const Formula neg = Formula::negation(f);
  for (const StandardDisjunction& clause : to_standard_disjunctions(neg, AgentCount(agents_), opts_.decide.normal_form)) {
    if (!decider_.witness(clause)) return negate(clause);
  }
  throw SynthesisError("no clause without a witness: " + render(f) + " is unsatisfiable");
}

PointedModel Synthesizer::model_of(const Formula& f) {
  if (auto it = cache_.find(f); it != cache_.end()) return it->second;
  PointedModel pm = [&] {
    if (f.modal_depth() == 0) {
      auto val = satisfying_valuation(f);
      if (!val) throw SynthesisError("propositionally unsatisfiable: " + render(f));
      return loop_model(agents_, *val);
    }
    const StandardConjunction sc = realized_conjunction(f);
    const Blueprint bp = build_blueprint(sc, logic_);
    auto provider = [&](const Formula& g) {
      if (g.modal_depth() >= f.modal_depth()) {
        throw SynthesisError("listed formula is not shallower: " + render(g));
      }
      if (!decider_.is_satisfiable(g)) throw SynthesisError("listed formula is unsatisfiable: " + render(g));
      return model_of(g);
    };
    PointedModel glued = realize(bp, sc.gamma, provider, logic_);
    if (opts_.verify_realization) {
      if (auto bad = realization_violation(glued, bp, sc)) throw SynthesisError("realization fails: " + *bad);
    }
    return glued;
  }();
  cache_.emplace(f, pm);
  return pm;
}

std::optional<PointedModel> synthesize(const Formula& f, const LogicId& x, AgentCount agents,
                                       const SynthOptions& opts) {
  return Synthesizer(x, agents, opts).synthesize(f);
}

}  // namespace gcl
