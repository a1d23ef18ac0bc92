#include "gcl/decide.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace gcl {

namespace {

// Straight-line program over 64-lane bit vectors: lane k of the low block
// holds assignment k of the first six variables.
class TruthTable {
 public:
  explicit TruthTable(const Formula& f) { root_ = compile(f); }

  bool tautology() const {
    const int vars = static_cast<int>(num_vars_);
    if (vars > 30) throw CapExceeded("tautology check limited to 30 variables");
    const int low = std::min(vars, 6);
    const std::uint64_t lane_mask = low == 6 ? ~0ULL : ((1ULL << (1u << low)) - 1ULL);
    const std::uint64_t blocks = vars > 6 ? (1ULL << (vars - 6)) : 1ULL;
    std::vector<std::uint64_t> regs(code_.size());
    for (std::uint64_t hi = 0; hi < blocks; ++hi) {
      for (std::size_t pc = 0; pc < code_.size(); ++pc) {
        const Op& op = code_[pc];
        switch (op.code) {
          case Op::Const: regs[pc] = ~0ULL; break;
          case Op::Var: regs[pc] = var_lanes(op.a, hi); break;
          case Op::Not: regs[pc] = ~regs[static_cast<std::size_t>(op.a)]; break;
          case Op::And: regs[pc] = regs[static_cast<std::size_t>(op.a)] & regs[static_cast<std::size_t>(op.b)]; break;
        }
      }
      if ((regs[static_cast<std::size_t>(root_)] & lane_mask) != lane_mask) return false;
    }
    return true;
  }

 private:
  struct Op {
    enum Code { Const, Var, Not, And } code;
    int a = 0;
    int b = 0;
  };

  static std::uint64_t var_lanes(int v, std::uint64_t hi) {
    static constexpr std::uint64_t kPatterns[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
    };
    if (v < 6) return kPatterns[v];
    return ((hi >> (v - 6)) & 1ULL) ? ~0ULL : 0ULL;
  }

  int emit(Op op) {
    code_.push_back(op);
    return static_cast<int>(code_.size() - 1);
  }

  int compile(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Top:
        return emit({Op::Const});
      case FormulaKind::Atom: {
        auto [it, inserted] = atoms_.emplace(f.atom_name(), static_cast<int>(num_vars_));
        if (inserted) ++num_vars_;
        return emit({Op::Var, it->second});
      }
      case FormulaKind::Coal: {
        auto [it, inserted] = modals_.emplace(f, static_cast<int>(num_vars_));
        if (inserted) ++num_vars_;
        return emit({Op::Var, it->second});
      }
      case FormulaKind::Not: {
        int a = compile(f.child());
        return emit({Op::Not, a});
      }
      case FormulaKind::And: {
        int a = compile(f.left());
        int b = compile(f.right());
        return emit({Op::And, a, b});
      }
    }
    return -1;
  }

  std::vector<Op> code_;
  std::map<std::string, int> atoms_;
  std::unordered_map<Formula, int, FormulaHash> modals_;
  std::size_t num_vars_ = 0;
  int root_ = -1;
};

Coalition coalition_union(NegativeSet set, const std::vector<ModalTerm>& negatives) {
  Coalition u;
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    if ((set >> i) & 1ULL) u = u | negatives[i].coalition;
  }
  return u;
}

}  // namespace

bool is_taut(const Formula& f) { return TruthTable(f).tautology(); }

bool is_neat(NegativeSet subset, const std::vector<ModalTerm>& negatives, const LogicId& x) {
  if (negatives.size() < 64 && (subset >> negatives.size()) != 0) {
    throw std::invalid_argument("neat-set candidate outside the negative index set");
  }
  if (!x.serial && subset == 0) return false;
  Coalition used;
  int nonempty = 0;
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    if (!((subset >> i) & 1ULL)) continue;
    const Coalition c = negatives[i].coalition;
    if (!c.disjoint(used)) return false;
    used = used | c;
    if (!c.is_empty()) ++nonempty;
  }
  return x.independent || nonempty <= 1;
}

std::vector<int> ReductionWitness::neat_indices() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if ((neat_set >> i) & 1ULL) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<NegativeSet, int>> reduction_candidates(const StandardDisjunction& sd, const LogicId& x,
                                                             NeatSearch search) {
  const auto& neg = sd.negatives;
  if (neg.size() > 62) throw CapExceeded("too many negative indices in one clause");
  std::vector<std::pair<NegativeSet, int>> out;
  for (std::size_t j = 0; j < sd.positives.size(); ++j) {
    const Coalition bound = sd.positives[j].coalition;
    // Neatness (ignoring the nonemptiness clause) and the coalition condition
    // are both closed under subsets, so a depth-first walk that only extends
    // admissible sets reaches every candidate.
    std::vector<NegativeSet> found;
    auto admissible_with = [&](Coalition used, int nonempty, std::size_t i) {
      const Coalition c = neg[i].coalition;
      if (!c.subset_of(bound) || !c.disjoint(used)) return false;
      return x.independent || c.is_empty() || nonempty == 0;
    };
    std::function<void(std::size_t, NegativeSet, Coalition, int)> walk =
        [&](std::size_t i, NegativeSet set, Coalition used, int nonempty) {
          if (i == neg.size()) {
            if (x.serial || set != 0) found.push_back(set);
            return;
          }
          walk(i + 1, set, used, nonempty);
          if (admissible_with(used, nonempty, i)) {
            const Coalition c = neg[i].coalition;
            walk(i + 1, set | (1ULL << i), used | c, nonempty + (c.is_empty() ? 0 : 1));
          }
        };
    walk(0, 0, Coalition::empty(), 0);

    if (search == NeatSearch::MaximalOnly) {
      std::vector<NegativeSet> maximal;
      for (NegativeSet set : found) {
        const Coalition used = coalition_union(set, neg);
        int nonempty = 0;
        for (std::size_t i = 0; i < neg.size(); ++i) {
          if (((set >> i) & 1ULL) && !neg[i].coalition.is_empty()) ++nonempty;
        }
        bool extendable = false;
        for (std::size_t i = 0; i < neg.size() && !extendable; ++i) {
          if (!((set >> i) & 1ULL) && admissible_with(used, nonempty, i)) extendable = true;
        }
        if (!extendable) maximal.push_back(set);
      }
      found = std::move(maximal);
    }
    std::sort(found.begin(), found.end(), [](NegativeSet a, NegativeSet b) {
      const int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca > cb : a < b;
    });
    for (NegativeSet set : found) out.emplace_back(set, static_cast<int>(j));
  }
  return out;
}

Formula reduction_formula(const StandardDisjunction& sd, const LogicId& x, NegativeSet neat_set, int j) {
  std::vector<Formula> ante;
  for (std::size_t i = 0; i < sd.negatives.size(); ++i) {
    if ((neat_set >> i) & 1ULL) ante.push_back(sd.negatives[i].body);
  }
  Formula goal = sd.positives.at(static_cast<std::size_t>(j)).body;
  if (x.deterministic) {
    std::vector<Formula> alts{goal};
    for (int k : basic_positive_indices(sd)) alts.push_back(sd.positives[static_cast<std::size_t>(k)].body);
    goal = Formula::disjunction_of(alts);
  }
  return Formula::implication(Formula::conjunction_of(ante), goal);
}

// The condition is exact for validity. Necessity: when no witness exists, the
// negated clause is satisfied by the model realized from its blueprint (see
// synth). Sufficiency: a witness gives a derivation of the clause from the
// reduced formula via Mon, A-SIA or A-IA, A-Ser and A-Det, so the clause is
// valid by soundness. Both directions need the reduced formulas, which are
// shallower, to be decided correctly.
std::optional<ReductionWitness> reduction_witness(const StandardDisjunction& sd, const LogicId& x,
                                                  const ValidityOracle& valid, NeatSearch search) {
  if (has_complementary_pair(sd.gamma)) return ReductionWitness{};
  for (const auto& [set, j] : reduction_candidates(sd, x, search)) {
    if (valid(reduction_formula(sd, x, set, j))) {
      return ReductionWitness{ReductionWitness::Kind::Modal, set, j};
    }
  }
  return std::nullopt;
}

Decider::Decider(LogicId x, AgentCount agents, DecideOptions opts)
    : logic_(x), agents_(agents.value()), opts_(std::move(opts)) {}

bool Decider::is_valid(const Formula& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  if (f.agents_mentioned().bound() > agents_) {
    throw std::invalid_argument("formula mentions agents outside 0.." + std::to_string(agents_ - 1));
  }
  bool result = true;
  if (f.modal_depth() == 0) {
    result = is_taut(f);
  } else {
    for (const StandardDisjunction& clause : to_standard_disjunctions(f, AgentCount(agents_), opts_.normal_form)) {
      if (!witness(clause)) {
        result = false;
        break;
      }
    }
  }
  memo_.emplace(f, result);
  return result;
}

std::optional<ReductionWitness> Decider::witness(const StandardDisjunction& sd) {
  return reduction_witness(sd, logic_, [this](const Formula& g) { return is_valid(g); }, opts_.search);
}

std::vector<Decider::ClauseReport> Decider::explain(const Formula& f) {
  std::vector<ClauseReport> out;
  for (StandardDisjunction& clause : to_standard_disjunctions(f, AgentCount(agents_), opts_.normal_form)) {
    auto w = witness(clause);
    out.push_back(ClauseReport{std::move(clause), std::move(w)});
  }
  return out;
}

bool is_valid(const Formula& f, const LogicId& x, AgentCount agents, const DecideOptions& opts) {
  return Decider(x, agents, opts).is_valid(f);
}

bool is_satisfiable(const Formula& f, const LogicId& x, AgentCount agents, const DecideOptions& opts) {
  return Decider(x, agents, opts).is_satisfiable(f);
}

std::string describe(const ReductionWitness& w) {
  if (w.kind == ReductionWitness::Kind::GammaTautology) return "gamma is a tautology";
  std::ostringstream out;
  out << "N'={";
  bool first = true;
  for (int i : w.neat_indices()) {
    out << (first ? "" : ",") << "-" << (i + 1);
    first = false;
  }
  out << "} j=" << w.positive_index;
  return out.str();
}

}  // namespace gcl
