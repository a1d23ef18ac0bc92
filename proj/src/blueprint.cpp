#include "gcl/blueprint.hpp"

#include <algorithm>

#include "gcl/random_model.hpp"

namespace gcl {

Blueprint empty_blueprint(int agents, int num_negatives, int num_positives) {
  if (num_positives < 1) throw std::invalid_argument("a blueprint needs at least one positive index");
  Blueprint bp;
  bp.agents = agents;
  bp.num_negatives = num_negatives;
  bp.num_positives = num_positives;
  for (int i = 0; i < num_negatives; ++i) bp.base_actions.push_back("n" + std::to_string(i + 1));
  for (int j = 0; j < num_positives; ++j) bp.base_actions.push_back("p" + std::to_string(j));
  return bp;
}

std::vector<Formula> Blueprint::list(const JointAction& a) const {
  std::vector<Formula> out;
  for (const auto& [profile, items] : listing) {
    if (!a.extended_by(profile)) continue;
    for (const Formula& f : items) {
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }
  return out;
}

std::set<JointAction> Blueprint::performable(Coalition c) const {
  std::set<JointAction> out;
  for (const auto& entry : listing) {
    if (!entry.second.empty()) out.insert(JointAction::restriction(entry.first, c));
  }
  return out;
}

NegativeSet support(const std::vector<ModalTerm>& negatives, const JointAction& a) {
  NegativeSet out = 0;
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const Coalition ci = negatives[i].coalition;
    if (!ci.subset_of(a.coalition())) continue;
    bool all = true;
    for (Agent ag : ci.members()) all = all && a.at(ag) == static_cast<ActionId>(i);
    if (all) out |= (1ULL << i);
  }
  return out;
}

int impeach(const JointAction& a, int num_negatives, int num_positives) {
  if (num_positives < 1) throw std::invalid_argument("impeach needs a nonempty positive index set");
  long sum = 0;
  for (Agent ag : a.coalition().members()) {
    const ActionId act = a.at(ag);
    if (act >= num_negatives && act < num_negatives + num_positives) sum += act - num_negatives;
  }
  return static_cast<int>(sum % num_positives);
}

Blueprint build_blueprint(const StandardConjunction& sc, const LogicId& x) {
  const int n_neg = static_cast<int>(sc.negatives.size());
  const int n_pos = static_cast<int>(sc.positives.size());
  if (n_pos < 1) throw std::invalid_argument("standard conjunction without positive indices");
  Blueprint bp = empty_blueprint(sc.agents, n_neg, n_pos);
  const Coalition grand = Coalition::full(sc.agents);
  const std::vector<int> basic = basic_positive_indices(sc);

  for (const Profile& p : all_profiles(sc.agents, bp.num_base_actions())) {
    const JointAction full = JointAction::restriction(p, grand);
    const NegativeSet supp = support(sc.negatives, full);
    if (!is_neat(supp, sc.negatives, x)) continue;

    std::vector<Formula> base;
    Coalition used;
    for (int i = 0; i < n_neg; ++i) {
      if ((supp >> i) & 1ULL) {
        base.push_back(sc.negatives[static_cast<std::size_t>(i)].body);
        used = used | sc.negatives[static_cast<std::size_t>(i)].coalition;
      }
    }
    auto conj_with = [&](std::vector<int> negated) {
      std::vector<Formula> parts = base;
      for (int k : negated) parts.push_back(Formula::negation(sc.positives[static_cast<std::size_t>(k)].body));
      return Formula::conjunction_of(parts);
    };

    std::vector<Formula> items;
    if (!x.deterministic) {
      for (int j = 0; j < n_pos; ++j) {
        if (used.subset_of(sc.positives[static_cast<std::size_t>(j)].coalition)) items.push_back(conj_with({j}));
      }
    } else {
      int k = impeach(full, n_neg, n_pos);
      if (!used.subset_of(sc.positives[static_cast<std::size_t>(k)].coalition)) k = 0;
      std::vector<int> negated{k};
      negated.insert(negated.end(), basic.begin(), basic.end());
      items.push_back(conj_with(negated));
    }
    if (!items.empty()) bp.listing.emplace(p, std::move(items));
  }
  return bp;
}

std::optional<std::string> regularity_violation(const Blueprint& bp, const LogicId& x,
                                                const SatisfiabilityOracle& sat) {
  if (sat) {
    for (const auto& [profile, items] : bp.listing) {
      for (const Formula& f : items) {
        if (!sat(f)) return "listed formula " + render(f) + " at " + describe_profile(bp, profile) + " is unsatisfiable";
      }
    }
  }
  const auto coalitions = all_coalitions(bp.agents);
  std::vector<std::set<JointAction>> pja;
  for (Coalition c : coalitions) pja.push_back(bp.performable(c));
  if (x.serial) {
    for (Coalition c : coalitions) {
      if (pja[c.mask()].empty()) return "no performable joint action for a coalition";
    }
  }
  if (x.independent) {
    for (Coalition c : coalitions) {
      for (Coalition d : coalitions) {
        if (!c.disjoint(d)) continue;
        for (const JointAction& a : pja[c.mask()]) {
          for (const JointAction& b : pja[d.mask()]) {
            if (pja[(c | d).mask()].count(a.merged_with(b)) == 0) {
              return "union of disjoint performable joint actions is not performable";
            }
          }
        }
      }
    }
  }
  if (x.deterministic) {
    for (const auto& [profile, items] : bp.listing) {
      if (items.size() != 1) return "listing at " + describe_profile(bp, profile) + " is not a singleton";
    }
  }
  return std::nullopt;
}

bool check_regular(const Blueprint& bp, const LogicId& x, const SatisfiabilityOracle& sat) {
  return !regularity_violation(bp, x, sat);
}

std::string describe_profile(const Blueprint& bp, const Profile& p) {
  std::string out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (a) out += '.';
    out += bp.base_actions.at(static_cast<std::size_t>(p[a]));
  }
  return out;
}

}  // namespace gcl
