#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcl/formula.hpp"

namespace gcl {

/// A propositional literal: an atom or its negation.
struct Literal {
  std::string atom;
  bool positive = true;

  Literal complement() const { return Literal{atom, !positive}; }
  Formula to_formula() const;
  auto operator<=>(const Literal&) const = default;
};

/// One modal conjunct or disjunct <coalition> body of a standard clause.
struct ModalTerm {
  Coalition coalition;
  Formula body;

  Formula to_formula() const { return Formula::coalition(coalition, body); }
  bool operator==(const ModalTerm& other) const {
    return coalition == other.coalition && body == other.body;
  }
};

/// gamma | (AND_i <A_i> phi_i -> OR_j <B_j> psi_j)
///
/// `negatives[i]` is (A_i, phi_i) and `positives[j]` is (B_j, psi_j). Index 0
/// of `positives` is always (AG, false), and whenever `negatives` is nonempty
/// one of its entries is (empty, true).
struct StandardDisjunction {
  int agents = 1;
  std::set<Literal> gamma;
  std::vector<ModalTerm> negatives;
  std::vector<ModalTerm> positives;
};

/// gamma & AND_i <A_i> phi_i & AND_j ~<B_j> psi_j, with the same index
/// conventions as StandardDisjunction.
struct StandardConjunction {
  int agents = 1;
  std::set<Literal> gamma;
  std::vector<ModalTerm> negatives;
  std::vector<ModalTerm> positives;
};

/// Raised when a configurable resource bound is exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormalFormOptions {
  /// Maximum number of clauses produced while distributing.
  std::size_t clause_cap = 100000;
};

/// Rewrites `f` (modal depth >= 1) as a conjunction of standard disjunctions.
///
/// Maximal modal subformulas are treated as opaque atoms and the propositional
/// skeleton is put in CNF by distribution, so the result is equivalent to `f`
/// (not merely equisatisfiable). Each clause is then split into gamma,
/// negatives and positives, with (empty, true) added to nonempty negatives and
/// (AG, false) placed at positive index 0. A clause containing the constant
/// `true` gets (empty, true) on both sides, which keeps it valid without
/// dropping its modal literals. Clauses with complementary literals are kept.
///
/// Throws std::invalid_argument for depth-0 input and CapExceeded when the
/// clause count passes `opts.clause_cap`.
std::vector<StandardDisjunction> to_standard_disjunctions(const Formula& f, AgentCount agents,
                                                          const NormalFormOptions& opts = {});

StandardConjunction negate(const StandardDisjunction& sd);
StandardDisjunction negate(const StandardConjunction& sc);

/// gamma | (AND_i <A_i> phi_i -> OR_j <B_j> psi_j); an empty gamma reads as
/// false and an empty antecedent as true.
Formula sd_to_formula(const StandardDisjunction& sd);
/// gamma & AND_i <A_i> phi_i & AND_j ~<B_j> psi_j; an empty gamma reads as true.
Formula sc_to_formula(const StandardConjunction& sc);

/// {j | B_j = AG}; always contains 0 for well-formed clauses.
std::vector<int> basic_positive_indices(const StandardDisjunction& sd);
std::vector<int> basic_positive_indices(const StandardConjunction& sc);

/// Description of the first broken clause invariant, or nullopt.
std::optional<std::string> invariant_violation(const StandardDisjunction& sd);

/// True iff gamma holds an atom in both polarities.
bool has_complementary_pair(const std::set<Literal>& gamma);

std::string describe(const StandardDisjunction& sd);

}  // namespace gcl
