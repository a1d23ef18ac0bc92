#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcl/logic_id.hpp"
#include "gcl/model.hpp"

namespace gcl {

struct RandomModelConfig {
  int states = 3;
  int actions = 2;
  int agents = 2;
  /// Upper bound on the size of a nonempty outcome set.
  int branching = 2;
  std::vector<std::string> atoms = {"p", "q"};
  /// Chance that a profile is available (non-independent generation).
  double density = 0.5;
};

/// A random model whose frame has every property named by `x`.
///
/// Independent models are generated agent-wise: each agent gets an enabled
/// action set per state, and a profile has a nonempty outcome iff each of its
/// actions is enabled for its agent. Serial models get nonempty enabled sets
/// (or at least one nonempty entry per state); deterministic models get
/// singleton outcome sets. Deterministic in (cfg, x, seed).
Model random_model(const RandomModelConfig& cfg, const LogicId& x, std::uint64_t seed);

/// All |actions|^agents profiles in lexicographic order.
std::vector<Profile> all_profiles(int agents, int actions);

}  // namespace gcl
