#include <gtest/gtest.h>

#include <algorithm>

#include "gcl/model_io.hpp"
#include "gcl/random_model.hpp"
#include "oracles.hpp"

namespace gcl {
namespace {

bool subset(const std::vector<StateId>& a, const std::vector<StateId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(GcgmProperties, OutcomeAntiMonotone) {
  std::mt19937_64 rng(201);
  for (int k = 0; k < 200; ++k) {
    const Model m = testing::random_sized_model(rng, LogicId::all()[static_cast<std::size_t>(k % 8)], 3, 4, 3, {"p"});
    for (StateId s = 0; s < m.num_states(); ++s) {
      for (const Profile& pr : all_profiles(3, m.num_actions())) {
        for (Coalition big : all_coalitions(3)) {
          const JointAction a_big = JointAction::restriction(pr, big);
          for (Coalition small : all_coalitions(3)) {
            if (!small.subset_of(big)) continue;
            EXPECT_TRUE(subset(outcome(m, s, a_big), outcome(m, s, a_big.restricted_to(small))));
          }
        }
      }
    }
  }
}

TEST(GcgmProperties, AvailabilityDownwardClosed) {
  std::mt19937_64 rng(202);
  for (int k = 0; k < 200; ++k) {
    const Model m = testing::random_sized_model(rng, LogicId::all()[static_cast<std::size_t>(k % 8)], 3, 4, 3, {"p"});
    for (StateId s = 0; s < m.num_states(); ++s) {
      for (Coalition c : all_coalitions(3)) {
        for (const JointAction& a : available_actions(m, s, c)) {
          for (Coalition d : all_coalitions(3)) {
            if (!d.subset_of(c)) continue;
            const auto avail = available_actions(m, s, d);
            EXPECT_TRUE(std::binary_search(avail.begin(), avail.end(), a.restricted_to(d)));
          }
        }
      }
    }
  }
}

TEST(GcgmProperties, RandomModelsHaveRequestedProperties) {
  for (const LogicId& x : LogicId::all()) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      RandomModelConfig cfg;
      cfg.agents = 1 + static_cast<int>(seed % 3);
      cfg.states = 1 + static_cast<int>(seed % 5);
      cfg.actions = 1 + static_cast<int>((seed / 5) % 3);
      const Model m = random_model(cfg, x, seed);
      const ValidationReport r = validate_model(m, x);
      ASSERT_TRUE(r.ok) << x.name() << " seed " << seed << ": " << r.violation->describe(m);
    }
  }
}

TEST(GcgmProperties, ValidationIsDownwardClosedInTheLogic) {
  std::mt19937_64 rng(203);
  for (int k = 0; k < 300; ++k) {
    const Model m = testing::random_sized_model(rng, LogicId::all()[static_cast<std::size_t>(k % 8)], 2, 3, 3, {});
    for (const LogicId& x : LogicId::all()) {
      if (!validate_model(m, x).ok) continue;
      for (const LogicId& y : LogicId::all()) {
        if (y.subset_of(x)) EXPECT_TRUE(validate_model(m, y).ok);
      }
    }
  }
}

TEST(GcgmProperties, FramePropertiesMatchDefinitions) {
  std::mt19937_64 rng(204);
  for (int k = 0; k < 300; ++k) {
    const Model m = testing::random_sized_model(rng, LogicId::all()[static_cast<std::size_t>(k % 8)], 1 + k % 3, 3, 2, {});
    ASSERT_EQ(frame_properties(m), testing::naive_frame_properties(m)) << format_model(m);
  }
}

TEST(GcgmProperties, FileRoundTrip) {
  std::mt19937_64 rng(205);
  for (int k = 0; k < 200; ++k) {
    const Model m = testing::random_sized_model(rng, LogicId::all()[static_cast<std::size_t>(k % 8)], 1 + k % 3, 5, 3, {"p", "q"});
    EXPECT_EQ(parse_model(format_model(m)).model, m);
  }
}

}  // namespace
}  // namespace gcl
