#include <gtest/gtest.h>

#include "gcl/decide.hpp"
#include "gcl/fuzz.hpp"
#include "gcl/mcheck.hpp"
#include "oracles.hpp"

namespace gcl {
namespace {

std::vector<ModalTerm> random_negatives(std::mt19937_64& rng, int agents, int count) {
  std::vector<ModalTerm> out = {ModalTerm{Coalition::empty(), Formula::top()}};
  for (int i = 1; i < count; ++i) out.push_back(ModalTerm{random_coalition(rng, agents), Formula::atom("p")});
  return out;
}

// Subsets of a neat set are neat, except the empty set when S is missing.
TEST(DecideProperties, NeatnessDownwardClosed) {
  std::mt19937_64 rng(401);
  for (int k = 0; k < 300; ++k) {
    const int n = static_cast<int>(rng() % 6) + 1;
    const auto neg = random_negatives(rng, 3, n);
    for (const LogicId& x : LogicId::all()) {
      for (NegativeSet big = 0; big < (1ULL << n); ++big) {
        if (!is_neat(big, neg, x)) continue;
        for (NegativeSet small = big;; small = (small - 1) & big) {
          if (small != 0 || x.serial) EXPECT_TRUE(is_neat(small, neg, x));
          if (small == 0) break;
        }
      }
    }
  }
}

TEST(DecideProperties, MaximalSearchMatchesFullSearch) {
  std::mt19937_64 rng(402);
  FormulaGenConfig cfg;
  cfg.max_depth = 2;
  cfg.max_size = 10;
  for (const LogicId& x : LogicId::all()) {
    DecideOptions full_opts;
    full_opts.search = NeatSearch::Full;
    Decider full(x, AgentCount(2), full_opts);
    Decider maximal(x, AgentCount(2));
    for (int k = 0; k < 150; ++k) {
      const Formula f = random_formula(rng, cfg);
      ASSERT_EQ(full.is_valid(f), maximal.is_valid(f)) << x.name() << ": " << render(f);
      if (f.modal_depth() == 0) continue;
      for (const auto& clause : to_standard_disjunctions(f, AgentCount(2))) {
        const auto a = full.witness(clause);
        const auto b = maximal.witness(clause);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
          EXPECT_EQ(a->kind, b->kind);
          EXPECT_EQ(a->neat_set, b->neat_set);
          EXPECT_EQ(a->positive_index, b->positive_index);
        }
      }
    }
  }
}

TEST(DecideProperties, ValidityMonotoneInTheLogic) {
  std::mt19937_64 rng(403);
  FormulaGenConfig cfg;
  cfg.max_depth = 2;
  cfg.max_size = 10;
  std::vector<Decider> deciders;
  for (const LogicId& x : LogicId::all()) deciders.emplace_back(x, AgentCount(2));
  for (int k = 0; k < 200; ++k) {
    const Formula f = random_formula(rng, cfg);
    std::vector<bool> valid;
    for (auto& d : deciders) valid.push_back(d.is_valid(f));
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        if (LogicId::all()[i].subset_of(LogicId::all()[j]) && valid[i]) EXPECT_TRUE(valid[j]) << render(f);
      }
    }
  }
}

TEST(DecideProperties, ValidFormulasHoldOnRandomModels) {
  std::mt19937_64 rng(404);
  FormulaGenConfig cfg;
  cfg.max_depth = 2;
  cfg.max_size = 8;
  for (const LogicId& x : LogicId::all()) {
    Decider d(x, AgentCount(2));
    int checked = 0;
    for (int k = 0; k < 400 && checked < 20; ++k) {
      const Formula f = random_formula(rng, cfg);
      if (!d.is_valid(f)) continue;
      ++checked;
      for (int t = 0; t < 20; ++t) {
        const Model m = testing::random_sized_model(rng, x, 2, 4, 3, cfg.atoms);
        ASSERT_TRUE(valid_on_model(m, f)) << x.name() << ": " << render(f);
      }
    }
    EXPECT_GT(checked, 0) << x.name();
  }
}

TEST(DecideProperties, SatisfiableIsNotValidNegation) {
  std::mt19937_64 rng(405);
  FormulaGenConfig cfg;
  for (const LogicId& x : LogicId::all()) {
    Decider d(x, AgentCount(2));
    for (int k = 0; k < 100; ++k) {
      const Formula f = random_formula(rng, cfg);
      EXPECT_EQ(d.is_satisfiable(f), !d.is_valid(Formula::negation(f)));
      EXPECT_FALSE(d.is_valid(f) && d.is_valid(Formula::negation(f)));
    }
  }
}

TEST(DecideProperties, NormalFormIsEquivalentAndKeepsDepth) {
  std::mt19937_64 rng(406);
  FormulaGenConfig cfg;
  cfg.atoms = {"p", "q", "r"};
  cfg.max_size = 10;
  for (int k = 0; k < 200; ++k) {
    cfg.max_depth = 1 + k % 3;
    const Formula f = random_formula(rng, cfg);
    if (f.modal_depth() == 0) continue;
    const auto clauses = to_standard_disjunctions(f, AgentCount(2));
    std::vector<Formula> parts;
    int depth = 0;
    for (const auto& c : clauses) {
      ASSERT_EQ(invariant_violation(c), std::nullopt);
      parts.push_back(sd_to_formula(c));
      depth = std::max(depth, parts.back().modal_depth());
    }
    EXPECT_EQ(depth, f.modal_depth());
    const Formula g = Formula::conjunction_of(parts);
    for (int t = 0; t < 10; ++t) {
      const Model m = testing::random_sized_model(rng, LogicId::all()[static_cast<std::size_t>(t % 8)], 2, 4, 3, cfg.atoms);
      Evaluator ev(m);
      for (StateId s = 0; s < m.num_states(); ++s) ASSERT_EQ(ev.satisfies(s, f), ev.satisfies(s, g)) << render(f);
    }
  }
}

// Two agents on one-state models: a second brute-force slice.
TEST(DecideProperties, BruteForceTwoAgentsOneState) {
  std::mt19937_64 rng(407);
  FormulaGenConfig cfg;
  cfg.atoms = {"p"};
  cfg.max_depth = 1;
  cfg.max_size = 6;
  for (const LogicId& x : LogicId::all()) {
    Decider d(x, AgentCount(2));
    for (int k = 0; k < 40; ++k) {
      const Formula f = random_formula(rng, cfg);
      if (testing::brute_force_satisfiable(f, x, 2, 1, 2, cfg.atoms)) {
        EXPECT_TRUE(d.is_satisfiable(f)) << x.name() << ": " << render(f);
      }
    }
  }
}

}  // namespace
}  // namespace gcl
