#include "gcl/random_model.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gcl {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  std::vector<StateId> targets(int states, int max_size) {
    int k = 1 + below(std::min(max_size, states));
    std::vector<StateId> pool(static_cast<std::size_t>(states));
    for (int i = 0; i < states; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(i + below(states - i))]);
    pool.resize(static_cast<std::size_t>(k));
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::vector<Profile> all_profiles(int agents, int actions) {
  std::vector<Profile> out;
  Profile p(static_cast<std::size_t>(agents), 0);
  while (true) {
    out.push_back(p);
    int a = agents - 1;
    while (a >= 0 && p[static_cast<std::size_t>(a)] == actions - 1) {
      p[static_cast<std::size_t>(a)] = 0;
      --a;
    }
    if (a < 0) break;
    ++p[static_cast<std::size_t>(a)];
  }
  return out;
}

Model random_model(const RandomModelConfig& cfg, const LogicId& x, std::uint64_t seed) {
  if (cfg.states < 1 || cfg.actions < 1 || cfg.agents < 1 || cfg.branching < 1) {
    throw std::invalid_argument("random model bounds must be >= 1");
  }
  Rng rng(seed);
  std::vector<std::string> actions;
  for (int a = 0; a < cfg.actions; ++a) actions.push_back("a" + std::to_string(a));
  std::vector<std::string> states;
  for (int s = 0; s < cfg.states; ++s) states.push_back("s" + std::to_string(s));
  Model m(cfg.agents, std::move(actions), std::move(states));
  for (const std::string& atom : cfg.atoms) m.declare_atom(atom);

  for (StateId s = 0; s < cfg.states; ++s) {
    for (const std::string& atom : cfg.atoms) {
      if (rng.chance(0.5)) m.add_label(s, atom);
    }
  }

  const int branching = x.deterministic ? 1 : cfg.branching;
  const auto profiles = all_profiles(cfg.agents, cfg.actions);

  for (StateId s = 0; s < cfg.states; ++s) {
    if (x.independent) {
      std::vector<std::vector<bool>> enabled(static_cast<std::size_t>(cfg.agents));
      for (auto& row : enabled) {
        row.resize(static_cast<std::size_t>(cfg.actions));
        for (int a = 0; a < cfg.actions; ++a) row[static_cast<std::size_t>(a)] = rng.chance(0.6);
        if (x.serial && std::none_of(row.begin(), row.end(), [](bool b) { return b; })) {
          row[static_cast<std::size_t>(rng.below(cfg.actions))] = true;
        }
      }
      if (!x.serial && rng.chance(0.2)) {
        auto& row = enabled[static_cast<std::size_t>(rng.below(cfg.agents))];
        std::fill(row.begin(), row.end(), false);
      }
      for (const Profile& p : profiles) {
        bool on = true;
        for (int ag = 0; ag < cfg.agents; ++ag) {
          on = on && enabled[static_cast<std::size_t>(ag)][static_cast<std::size_t>(p[static_cast<std::size_t>(ag)])];
        }
        if (on) m.set_outcome(s, p, rng.targets(cfg.states, branching));
      }
    } else {
      for (const Profile& p : profiles) {
        if (rng.chance(cfg.density)) m.set_outcome(s, p, rng.targets(cfg.states, branching));
      }
      if (x.serial && m.entries(s).empty()) {
        const Profile& p = profiles[static_cast<std::size_t>(rng.below(static_cast<int>(profiles.size())))];
        m.set_outcome(s, p, rng.targets(cfg.states, branching));
      }
    }
  }
  return m;
}

}  // namespace gcl
