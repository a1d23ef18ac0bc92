#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcl/formula.hpp"
#include "gcl/logic_id.hpp"
#include "gcl/nform.hpp"

namespace gcl {

/// A subset of a clause's negative indices, as a bitmask over positions in
/// `negatives`.
using NegativeSet = std::uint64_t;

/// Classical tautology check. Maximal modal subformulas are treated as opaque
/// atoms. Throws CapExceeded beyond 30 distinct variables.
bool is_taut(const Formula& f);

/// X-neatness of `subset`:
///  (1) coalitions of distinct members are pairwise disjoint;
///  (2) without S, the subset is nonempty;
///  (3) without I, at most one member has a nonempty coalition.
bool is_neat(NegativeSet subset, const std::vector<ModalTerm>& negatives, const LogicId& x);

/// Why a standard disjunction is valid.
struct ReductionWitness {
  enum class Kind { GammaTautology, Modal };
  Kind kind = Kind::GammaTautology;
  /// Modal kind: the neat set N' and the positive index j.
  NegativeSet neat_set = 0;
  int positive_index = -1;

  std::vector<int> neat_indices() const;
};

enum class NeatSearch {
  /// Every X-neat N' with the coalition condition.
  Full,
  /// Only candidates that cannot be extended by another negative index. The
  /// reduced implication only gets weaker as N' shrinks, so this finds a
  /// witness iff Full does, and the same first one.
  MaximalOnly,
};

/// (N', j) pairs in search order: j ascending, then N' by decreasing
/// cardinality, ties broken by increasing bitmask. Each N' is X-neat and the
/// union of its coalitions is within B_j.
std::vector<std::pair<NegativeSet, int>> reduction_candidates(const StandardDisjunction& sd, const LogicId& x,
                                                             NeatSearch search);

/// The shallower formula whose validity the pair (N', j) needs:
/// AND_{i in N'} phi_i -> psi_j, or, with D,
/// AND_{i in N'} phi_i -> (psi_j | OR_{k basic} psi_k).
Formula reduction_formula(const StandardDisjunction& sd, const LogicId& x, NegativeSet neat_set, int j);

using ValidityOracle = std::function<bool(const Formula&)>;

/// Checks the X-validity-reduction-condition of `sd`, calling `valid` on the
/// reduced formulas. Returns the first witness in search order, or nullopt.
std::optional<ReductionWitness> reduction_witness(const StandardDisjunction& sd, const LogicId& x,
                                                  const ValidityOracle& valid,
                                                  NeatSearch search = NeatSearch::MaximalOnly);

struct DecideOptions {
  NormalFormOptions normal_form;
  NeatSearch search = NeatSearch::MaximalOnly;
};

/// Validity and satisfiability for one logic and agent count, with a memo
/// table over formulas that lives as long as the Decider.
class Decider {
 public:
  Decider(LogicId x, AgentCount agents, DecideOptions opts = {});

  const LogicId& logic() const noexcept { return logic_; }
  int agents() const noexcept { return agents_; }

  bool is_valid(const Formula& f);
  bool is_satisfiable(const Formula& f) { return !is_valid(Formula::negation(f)); }

  std::optional<ReductionWitness> witness(const StandardDisjunction& sd);

  struct ClauseReport {
    StandardDisjunction clause;
    std::optional<ReductionWitness> witness;
  };
  /// Top-level clauses of `f` (modal depth >= 1) with their witnesses.
  std::vector<ClauseReport> explain(const Formula& f);

  std::size_t cache_size() const noexcept { return memo_.size(); }

 private:
  LogicId logic_;
  int agents_;
  DecideOptions opts_;
  std::unordered_map<Formula, bool, FormulaHash> memo_;
};

bool is_valid(const Formula& f, const LogicId& x, AgentCount agents, const DecideOptions& opts = {});
bool is_satisfiable(const Formula& f, const LogicId& x, AgentCount agents, const DecideOptions& opts = {});

std::string describe(const ReductionWitness& w);

}  // namespace gcl
