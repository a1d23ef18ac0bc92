#include <gtest/gtest.h>

#include "gcl/formula.hpp"

namespace gcl {
namespace {

const AgentCount two(2);

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

TEST(Parse, ConjunctionWithNegation) {
  EXPECT_EQ(parse("p & ~q", two), Formula::conjunction(p(), Formula::negation(q())));
}

TEST(Parse, SingleAgentModality) {
  EXPECT_EQ(parse("<1> p", two), Formula::coalition(Coalition::of({1}), p()));
}

TEST(Parse, EmptyDualDesugarsToNotCoalNot) {
  const Formula expected = Formula::negation(Formula::coalition(Coalition::empty(), Formula::negation(p())));
  EXPECT_EQ(parse("[ ] p", two), expected);
  EXPECT_EQ(parse("[]p", two), expected);
}

TEST(Parse, FalseIsNotTop) {
  const Formula f = parse("false", two);
  ASSERT_EQ(f.kind(), FormulaKind::Not);
  EXPECT_TRUE(f.child().is_top());
  EXPECT_TRUE(f.is_bottom());
}

TEST(Parse, StarIsGrandCoalition) {
  EXPECT_EQ(parse("<*> p", two).coal(), Coalition::full(2));
  EXPECT_EQ(parse("<*> p", AgentCount(3)).coal(), Coalition::full(3));
}

TEST(Parse, Precedence) {
  // ~ and modalities bind tighter than &, & tighter than |, | tighter than ->.
  EXPECT_EQ(parse("~p & q", two), Formula::conjunction(Formula::negation(p()), q()));
  EXPECT_EQ(parse("<0>p & q", two), Formula::conjunction(Formula::coalition(Coalition::of({0}), p()), q()));
  EXPECT_EQ(parse("p | q & p", two), Formula::disjunction(p(), Formula::conjunction(q(), p())));
  EXPECT_EQ(parse("p | q -> p", two), Formula::implication(Formula::disjunction(p(), q()), p()));
}

TEST(Parse, ImplicationIsRightAssociative) {
  const Formula r = Formula::atom("r");
  EXPECT_EQ(parse("p -> q -> r", two), Formula::implication(p(), Formula::implication(q(), r)));
}

TEST(Parse, AndOrAreLeftAssociative) {
  const Formula r = Formula::atom("r");
  EXPECT_EQ(parse("p & q & r", two), Formula::conjunction(Formula::conjunction(p(), q()), r));
  EXPECT_EQ(parse("p | q | r", two), Formula::disjunction(Formula::disjunction(p(), q()), r));
}

TEST(Parse, ParenthesesOverride) {
  EXPECT_EQ(parse("(p | q) & p", two), Formula::conjunction(Formula::disjunction(p(), q()), p()));
}

TEST(Parse, IdentifiersAndKeywords) {
  EXPECT_EQ(parse("true", two), Formula::top());
  EXPECT_EQ(parse("_x1", two), Formula::atom("_x1"));
  EXPECT_EQ(parse("trueish", two), Formula::atom("trueish"));
}

TEST(Parse, CoalitionLists) {
  EXPECT_EQ(parse("<0,1>p", two).coal(), Coalition::of({0, 1}));
  EXPECT_EQ(parse("< 1 , 0 > p", two).coal(), Coalition::of({0, 1}));
  EXPECT_EQ(parse("<>p", two).coal(), Coalition::empty());
}

TEST(Parse, AgentOutOfRangeIsRejectedWithPosition) {
  try {
    parse("p & <2>q", two);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  for (const char* bad : {"", "p &", "(p", "p q", "<0 p", "<a>p", "p -> ", "~", "[0", "p | | q", "<0,>p", "&p"}) {
    EXPECT_THROW(parse(bad, two), ParseError) << bad;
  }
  try {
    parse("p q", two);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Render, Coalition) { EXPECT_EQ(render(Formula::coalition(Coalition::of({0, 1}), p())), "<0,1> p"); }

TEST(Render, False) { EXPECT_EQ(render(Formula::bottom()), "false"); }

TEST(Render, Conjunction) { EXPECT_EQ(render(Formula::conjunction(p(), q())), "(p & q)"); }

TEST(Render, DerivedConnectivesRoundTrip) {
  for (const char* text : {"p | q", "p -> q", "[0] p", "[] ~p", "~<*>false", "<>true", "~~p",
                           "<0>(p & <1>~q) -> [0,1](q | ~p)"}) {
    const Formula f = parse(text, two);
    EXPECT_EQ(parse(render(f), two), f) << text << " rendered as " << render(f);
  }
  const Formula eq = Formula::equivalence(p(), q());
  EXPECT_EQ(parse(render(eq), two), eq);
}

TEST(ModalDepth, Examples) {
  EXPECT_EQ(modal_depth(p()), 0);
  EXPECT_EQ(modal_depth(Formula::coalition(Coalition::of({1}), p())), 1);
  const Formula inner = Formula::implication(p(), Formula::coalition(Coalition::full(2), q()));
  EXPECT_EQ(modal_depth(Formula::coalition(Coalition::empty(), inner)), 2);
}

TEST(Formula, StructuralEqualityAndHash) {
  const Formula a = parse("<0>(p & q)", two);
  const Formula b = Formula::coalition(Coalition::of({0}), Formula::conjunction(p(), q()));
  EXPECT_EQ(a, b);
  EXPECT_EQ(FormulaHash{}(a), FormulaHash{}(b));
  EXPECT_NE(a, parse("<1>(p & q)", two));
  EXPECT_NE(a, parse("<0>(q & p)", two));
}

TEST(Formula, FoldsOfEmptyLists) {
  EXPECT_EQ(Formula::conjunction_of({}), Formula::top());
  EXPECT_EQ(Formula::disjunction_of({}), Formula::bottom());
  EXPECT_EQ(Formula::conjunction_of({p()}), p());
  EXPECT_EQ(Formula::conjunction_of({p(), q(), p()}),
            Formula::conjunction(Formula::conjunction(p(), q()), p()));
}

TEST(Formula, AtomsAndAgents) {
  const Formula f = parse("<1>(p & [0]r) | q", AgentCount(3));
  EXPECT_EQ(atoms_of(f), (std::set<std::string>{"p", "q", "r"}));
  EXPECT_EQ(f.agents_mentioned(), Coalition::of({0, 1}));
}

}  // namespace
}  // namespace gcl
