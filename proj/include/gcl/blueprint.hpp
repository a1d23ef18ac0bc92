#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcl/decide.hpp"
#include "gcl/formula.hpp"
#include "gcl/logic_id.hpp"
#include "gcl/model.hpp"
#include "gcl/nform.hpp"

namespace gcl {

/// Finite listing function over full profiles of a base action set.
///
/// The base actions are index-named after the clause they come from: action
/// ids 0..N-1 stand for the negative indices (printed n1..nN) and ids
/// N..N+M-1 for the positive indices 0..M-1 (printed p0..p{M-1}). Profiles
/// with an empty listing are not stored.
struct Blueprint {
  int agents = 1;
  int num_negatives = 0;
  int num_positives = 1;
  std::vector<std::string> base_actions;
  std::map<Profile, std::vector<Formula>> listing;

  int num_base_actions() const noexcept { return num_negatives + num_positives; }
  ActionId negative_action(int i) const noexcept { return i; }
  ActionId positive_action(int j) const noexcept { return num_negatives + j; }
  bool is_negative_action(ActionId a) const noexcept { return a >= 0 && a < num_negatives; }
  bool is_positive_action(ActionId a) const noexcept {
    return a >= num_negatives && a < num_base_actions();
  }

  /// list_C(a): union of the listings of all profiles extending `a`.
  std::vector<Formula> list(const JointAction& a) const;
  /// PJA_C: joint actions of `c` with a nonempty derived listing.
  std::set<JointAction> performable(Coalition c) const;
};

/// Blueprint with empty listing over `num_negatives` + `num_positives` base actions.
Blueprint empty_blueprint(int agents, int num_negatives, int num_positives);

/// {i | A_i within C and a assigns action i to every member of A_i}.
/// Negative indices with an empty coalition are always included.
NegativeSet support(const std::vector<ModalTerm>& negatives, const JointAction& a);

/// Sum of the positive indices played in `a`, modulo `num_positives`.
int impeach(const JointAction& a, int num_negatives, int num_positives);

/// The listing of the countermodel construction for standard conjunction `sc`.
///
/// Without D, a profile with X-neat support S lists AND_{i in S} phi_i & ~psi_j
/// for every j with the union of S's coalitions inside B_j. With D, it lists
/// the single formula AND_{i in S} phi_i & ~psi_k & AND_{basic k'} ~psi_k',
/// where k is the impeached index if its coalition admits S, and 0 otherwise.
/// Profiles whose support is not X-neat list nothing.
Blueprint build_blueprint(const StandardConjunction& sc, const LogicId& x);

using SatisfiabilityOracle = std::function<bool(const Formula&)>;

/// First failing regularity condition for `x`, or nullopt:
/// every listed formula X-satisfiable; with S, every PJA_C nonempty; with I,
/// unions of disjoint performable actions performable; with D, every nonempty
/// listing a singleton. `sat` may be empty to skip the satisfiability check.
std::optional<std::string> regularity_violation(const Blueprint& bp, const LogicId& x,
                                                const SatisfiabilityOracle& sat);
bool check_regular(const Blueprint& bp, const LogicId& x, const SatisfiabilityOracle& sat);

std::string describe_profile(const Blueprint& bp, const Profile& p);

}  // namespace gcl
