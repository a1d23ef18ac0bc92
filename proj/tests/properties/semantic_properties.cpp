#include <gtest/gtest.h>

#include "gcl/fuzz.hpp"
#include "gcl/mcheck.hpp"
#include "oracles.hpp"

namespace gcl {
namespace {

TEST(SemanticProperties, EvaluatorMatchesNaiveSemantics) {
  std::mt19937_64 rng(301);
  FormulaGenConfig cfg;
  cfg.max_depth = 3;
  cfg.max_size = 10;
  for (int k = 0; k < 300; ++k) {
    const Model m = testing::random_sized_model(rng, LogicId::all()[static_cast<std::size_t>(k % 8)], 2, 3, 2, {"p", "q"});
    Evaluator ev(m);
    for (int t = 0; t < 5; ++t) {
      const Formula f = random_formula(rng, cfg);
      for (StateId s = 0; s < m.num_states(); ++s) {
        ASSERT_EQ(ev.satisfies(s, f), testing::naive_satisfies(m, s, f)) << render(f);
      }
    }
  }
}

TEST(SemanticProperties, CoalitionMonotonicity) {
  std::mt19937_64 rng(302);
  FormulaGenConfig cfg;
  cfg.agents = 3;
  cfg.max_depth = 1;
  for (int k = 0; k < 200; ++k) {
    const Model m = testing::random_sized_model(rng, LogicId{}, 3, 4, 2, {"p", "q"});
    Evaluator ev(m);
    const Formula f = random_formula(rng, cfg);
    for (StateId s = 0; s < m.num_states(); ++s) {
      for (Coalition c : all_coalitions(3)) {
        if (!ev.satisfies(s, Formula::coalition(c, f))) continue;
        for (Coalition d : all_coalitions(3)) {
          if (c.subset_of(d)) EXPECT_TRUE(ev.satisfies(s, Formula::coalition(d, f)));
        }
      }
    }
  }
}

TEST(SemanticProperties, NoAbsurdActionAnywhere) {
  std::mt19937_64 rng(303);
  for (int k = 0; k < 200; ++k) {
    const Model m = testing::random_sized_model(rng, LogicId::all()[static_cast<std::size_t>(k % 8)], 3, 5, 3, {});
    for (Coalition c : all_coalitions(3)) {
      EXPECT_TRUE(valid_on_model(m, Formula::negation(Formula::coalition(c, Formula::bottom()))));
    }
  }
}

// Each schema instance holds on random models of every logic it is sound for.
TEST(SemanticProperties, SchemasHoldOnTheirModels) {
  std::mt19937_64 rng(304);
  for (const LogicId& x : LogicId::all()) {
    for (int k = 0; k < 60; ++k) {
      const int agents = 1 + k % 3;
      FormulaGenConfig cfg;
      cfg.agents = agents;
      cfg.max_depth = 1;
      cfg.max_size = 5;
      const Model m = testing::random_sized_model(rng, x, agents, 5, 3, {"p", "q"});
      Evaluator ev(m);
      for (Schema s : all_schemas()) {
        if (!schema_logic(s).subset_of(x)) continue;
        const Formula f = schema_instance(s, rng, cfg);
        for (StateId st = 0; st < m.num_states(); ++st) {
          ASSERT_TRUE(ev.satisfies(st, f)) << to_string(s) << " in " << x.name() << ": " << render(f);
        }
      }
    }
  }
}

}  // namespace
}  // namespace gcl
