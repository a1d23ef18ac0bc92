#include "gcl/nform.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace gcl {

Formula Literal::to_formula() const {
  Formula a = Formula::atom(atom);
  return positive ? a : Formula::negation(a);
}

namespace {

// Literal of the propositional skeleton: the constant true, an atom, or an
// opaque maximal modal subformula.
struct SkeletonLiteral {
  enum Kind { Const, Prop, Modal } kind;
  int id;
  bool positive;
  auto operator<=>(const SkeletonLiteral&) const = default;
};

using Clause = std::vector<SkeletonLiteral>;

class Skeleton {
 public:
  explicit Skeleton(std::size_t cap) : cap_(cap) {}

  std::vector<Clause> cnf(const Formula& f, bool positive) {
    switch (f.kind()) {
      case FormulaKind::Top:
        return {{SkeletonLiteral{SkeletonLiteral::Const, 0, positive}}};
      case FormulaKind::Atom:
        return {{SkeletonLiteral{SkeletonLiteral::Prop, atom_id(f.atom_name()), positive}}};
      case FormulaKind::Coal:
        return {{SkeletonLiteral{SkeletonLiteral::Modal, modal_id(f), positive}}};
      case FormulaKind::Not:
        return cnf(f.child(), !positive);
      case FormulaKind::And:
        break;
    }
    auto lhs = cnf(f.left(), positive);
    auto rhs = cnf(f.right(), positive);
    if (positive) {
      check_cap(lhs.size() + rhs.size());
      lhs.insert(lhs.end(), rhs.begin(), rhs.end());
      return normalize(std::move(lhs));
    }
    // ~(a & b) = ~a | ~b: distribute the two clause sets.
    check_cap(lhs.size() * rhs.size());
    std::vector<Clause> out;
    out.reserve(lhs.size() * rhs.size());
    for (const Clause& a : lhs) {
      for (const Clause& b : rhs) {
        Clause c = a;
        c.insert(c.end(), b.begin(), b.end());
        out.push_back(std::move(c));
      }
    }
    return normalize(std::move(out));
  }

  const std::string& atom_name(int id) const { return atoms_[static_cast<std::size_t>(id)]; }
  const Formula& modal(int id) const { return modals_[static_cast<std::size_t>(id)]; }

 private:
  void check_cap(std::size_t n) const {
    if (n > cap_) {
      throw CapExceeded("normal form exceeds the clause cap of " + std::to_string(cap_) + " clauses");
    }
  }

  static std::vector<Clause> normalize(std::vector<Clause> clauses) {
    for (Clause& c : clauses) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::sort(clauses.begin(), clauses.end());
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    return clauses;
  }

  int atom_id(const std::string& name) {
    auto [it, inserted] = atom_ids_.emplace(name, static_cast<int>(atoms_.size()));
    if (inserted) atoms_.push_back(name);
    return it->second;
  }

  int modal_id(const Formula& f) {
    auto [it, inserted] = modal_ids_.emplace(f, static_cast<int>(modals_.size()));
    if (inserted) modals_.push_back(f);
    return it->second;
  }

  std::size_t cap_;
  std::vector<std::string> atoms_;
  std::map<std::string, int> atom_ids_;
  std::vector<Formula> modals_;
  std::unordered_map<Formula, int, FormulaHash> modal_ids_;
};

ModalTerm empty_top() { return ModalTerm{Coalition::empty(), Formula::top()}; }
ModalTerm grand_bottom(int agents) { return ModalTerm{Coalition::full(agents), Formula::bottom()}; }

void add_unique(std::vector<ModalTerm>& terms, const ModalTerm& t) {
  if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(t);
}

// Puts `t` at the front, moving an existing copy rather than duplicating it.
void pin_front(std::vector<ModalTerm>& terms, const ModalTerm& t) {
  auto it = std::find(terms.begin(), terms.end(), t);
  if (it != terms.end()) terms.erase(it);
  terms.insert(terms.begin(), t);
}

template <typename Clause>
std::vector<int> basic_indices(const Clause& c) {
  std::vector<int> out;
  const Coalition grand = Coalition::full(c.agents);
  for (std::size_t j = 0; j < c.positives.size(); ++j) {
    if (c.positives[j].coalition == grand) out.push_back(static_cast<int>(j));
  }
  return out;
}

}  // namespace

std::vector<StandardDisjunction> to_standard_disjunctions(const Formula& f, AgentCount agents,
                                                          const NormalFormOptions& opts) {
  if (f.modal_depth() < 1) {
    throw std::invalid_argument("normal form needs modal depth >= 1; decide depth-0 formulas propositionally");
  }
  if (f.agents_mentioned().bound() > agents.value()) {
    throw std::invalid_argument("formula mentions agents outside 0.." + std::to_string(agents.value() - 1));
  }
  Skeleton skel(opts.clause_cap);
  const auto clauses = skel.cnf(f, true);

  std::vector<StandardDisjunction> out;
  out.reserve(clauses.size());
  for (const Clause& clause : clauses) {
    StandardDisjunction sd;
    sd.agents = agents.value();
    bool has_true = false;
    for (const SkeletonLiteral& lit : clause) {
      switch (lit.kind) {
        case SkeletonLiteral::Const:
          // A false disjunct contributes nothing.
          has_true = has_true || lit.positive;
          break;
        case SkeletonLiteral::Prop:
          sd.gamma.insert(Literal{skel.atom_name(lit.id), lit.positive});
          break;
        case SkeletonLiteral::Modal: {
          const Formula& m = skel.modal(lit.id);
          ModalTerm term{m.coal(), m.child()};
          add_unique(lit.positive ? sd.positives : sd.negatives, term);
          break;
        }
      }
    }
    if (has_true) {
      add_unique(sd.negatives, empty_top());
      add_unique(sd.positives, empty_top());
    }
    if (!sd.negatives.empty()) pin_front(sd.negatives, empty_top());
    pin_front(sd.positives, grand_bottom(sd.agents));
    out.push_back(std::move(sd));
  }
  return out;
}

StandardConjunction negate(const StandardDisjunction& sd) {
  StandardConjunction sc;
  sc.agents = sd.agents;
  for (const Literal& l : sd.gamma) sc.gamma.insert(l.complement());
  sc.negatives = sd.negatives;
  sc.positives = sd.positives;
  return sc;
}

StandardDisjunction negate(const StandardConjunction& sc) {
  StandardDisjunction sd;
  sd.agents = sc.agents;
  for (const Literal& l : sc.gamma) sd.gamma.insert(l.complement());
  sd.negatives = sc.negatives;
  sd.positives = sc.positives;
  return sd;
}

Formula sd_to_formula(const StandardDisjunction& sd) {
  std::vector<Formula> lits;
  for (const Literal& l : sd.gamma) lits.push_back(l.to_formula());
  std::vector<Formula> ante;
  for (const ModalTerm& t : sd.negatives) ante.push_back(t.to_formula());
  std::vector<Formula> cons;
  for (const ModalTerm& t : sd.positives) cons.push_back(t.to_formula());
  return Formula::disjunction(Formula::disjunction_of(lits),
                              Formula::implication(Formula::conjunction_of(ante), Formula::disjunction_of(cons)));
}

Formula sc_to_formula(const StandardConjunction& sc) {
  std::vector<Formula> parts;
  if (sc.gamma.empty()) {
    parts.push_back(Formula::top());
  } else {
    for (const Literal& l : sc.gamma) parts.push_back(l.to_formula());
  }
  for (const ModalTerm& t : sc.negatives) parts.push_back(t.to_formula());
  for (const ModalTerm& t : sc.positives) parts.push_back(Formula::negation(t.to_formula()));
  return Formula::conjunction_of(parts);
}

std::vector<int> basic_positive_indices(const StandardDisjunction& sd) { return basic_indices(sd); }
std::vector<int> basic_positive_indices(const StandardConjunction& sc) { return basic_indices(sc); }

std::optional<std::string> invariant_violation(const StandardDisjunction& sd) {
  if (sd.positives.empty() || !(sd.positives.front() == grand_bottom(sd.agents))) {
    return "positive index 0 is not <AG> false";
  }
  if (!sd.negatives.empty() &&
      std::find(sd.negatives.begin(), sd.negatives.end(), empty_top()) == sd.negatives.end()) {
    return "nonempty negatives without <> true";
  }
  const std::uint32_t limit = Coalition::full(sd.agents).mask();
  for (const auto* family : {&sd.negatives, &sd.positives}) {
    for (const ModalTerm& t : *family) {
      if ((t.coalition.mask() & ~limit) != 0 || t.body.agents_mentioned().bound() > sd.agents) {
        return "coalition outside the agent set";
      }
    }
  }
  return std::nullopt;
}

bool has_complementary_pair(const std::set<Literal>& gamma) {
  for (const Literal& l : gamma) {
    if (l.positive && gamma.count(l.complement())) return true;
  }
  return false;
}

std::string describe(const StandardDisjunction& sd) {
  std::ostringstream out;
  out << "gamma={";
  bool first = true;
  for (const Literal& l : sd.gamma) {
    out << (first ? "" : ", ") << (l.positive ? "" : "~") << l.atom;
    first = false;
  }
  out << "} negatives=[";
  for (std::size_t i = 0; i < sd.negatives.size(); ++i) {
    out << (i ? ", " : "") << "-" << (i + 1) << ": " << render(sd.negatives[i].to_formula());
  }
  out << "] positives=[";
  for (std::size_t j = 0; j < sd.positives.size(); ++j) {
    out << (j ? ", " : "") << j << ": " << render(sd.positives[j].to_formula());
  }
  out << "]";
  return out.str();
}

}  // namespace gcl
