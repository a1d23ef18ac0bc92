#include <gtest/gtest.h>

#include "gcl/fuzz.hpp"

namespace gcl {
namespace {

TEST(SyntaxProperties, RenderParseRoundTrip) {
  std::mt19937_64 rng(101);
  for (int agents = 1; agents <= 3; ++agents) {
    FormulaGenConfig cfg;
    cfg.agents = agents;
    cfg.atoms = {"p", "q", "r_1"};
    cfg.max_depth = 3;
    cfg.max_size = 16;
    for (int k = 0; k < 1000; ++k) {
      const Formula f = random_formula(rng, cfg);
      const std::string text = render(f);
      ASSERT_EQ(parse(text, AgentCount(agents)), f) << text;
    }
  }
}

TEST(SyntaxProperties, DepthLaws) {
  std::mt19937_64 rng(102);
  FormulaGenConfig cfg;
  cfg.max_depth = 3;
  for (int k = 0; k < 500; ++k) {
    const Formula f = random_formula(rng, cfg);
    const Formula g = random_formula(rng, cfg);
    EXPECT_EQ(Formula::negation(f).modal_depth(), f.modal_depth());
    EXPECT_EQ(Formula::conjunction(f, g).modal_depth(), std::max(f.modal_depth(), g.modal_depth()));
    EXPECT_EQ(Formula::coalition(Coalition::of({1}), f).modal_depth(), f.modal_depth() + 1);
  }
}

TEST(SyntaxProperties, ParserRejectsGarbageWithoutCrashing) {
  std::mt19937_64 rng(103);
  const std::string alphabet = "pq<>[]~&|-()*,01 x";
  int rejected = 0;
  for (int k = 0; k < 3000; ++k) {
    std::string text;
    const int len = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
    try {
      const Formula f = parse(text, AgentCount(2));
      EXPECT_EQ(parse(render(f), AgentCount(2)), f) << text;
    } catch (const ParseError& e) {
      EXPECT_LE(e.position(), text.size());
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
}

}  // namespace
}  // namespace gcl
