#include <doctest.h>

#include <random>

#include "letf/gen.hpp"
#include "letf/parser.hpp"
#include "test_util.hpp"

using namespace letf;
using letf::test::F;
using letf::test::FL;

TEST_CASE("grammar and precedence") {
  CHECK(F("~(p & q)") == Formula::neg(Formula::conj(F("p"), F("q"))));
  CHECK(F("p | q & r") == Formula::disj(F("p"), Formula::conj(F("q"), F("r"))));
  CHECK(F("@p | #p") == Formula::disj(Formula::circ(F("p")), Formula::bullet(F("p"))));
  CHECK(F("~p & q") == Formula::conj(Formula::neg(F("p")), F("q")));
  CHECK(F("p & q & r") == F("(p & q) & r"));    // left associative
  CHECK(F("p | q | r") == F("(p | q) | r"));
  CHECK(F("p -> q -> r") == F("p -> (q -> r)"));  // right associative
  CHECK(F("  p  ") == F("p"));
  CHECK(F("long_name1 & Q_2") == Formula::conj(F("long_name1"), F("Q_2")));
}

TEST_CASE("unicode aliases") {
  CHECK(F("¬p") == F("~p"));
  CHECK(F("p ∧ q") == F("p & q"));
  CHECK(F("p ∨ q") == F("p | q"));
  CHECK(F("∘p") == F("@p"));
  CHECK(F("•p") == F("#p"));
}

TEST_CASE("sugar desugars at parse time") {
  CHECK(F("p -> q") == Formula::disj(Formula::neg(F("p")), F("q")));
  CHECK(F("sim p") == Formula::conj(Formula::circ(F("p")), Formula::neg(F("p"))));
  CHECK(F("approx p") == Formula::disj(Formula::bullet(F("p")), Formula::neg(F("p"))));
  CHECK(F("bot(x)") == F("x & ~x & @x"));
  CHECK(F("sim (p | q)") == F("@(p | q) & ~(p | q)"));
  // 'bot' without parentheses is an ordinary atom
  CHECK(F("bot").kind() == Conn::Atom);
}

TEST_CASE("render: minimal parentheses") {
  CHECK(render(F("~~p")) == "~~p");
  CHECK(render(Formula::circ(F("p")), RenderStyle::Unicode) == "∘p");
  CHECK(render(Formula::conj(F("p"), Formula::disj(F("q"), F("r")))) == "p & (q | r)");
  CHECK(render(F("~(p & q)")) == "~(p & q)");
  CHECK(render(F("p | q & r")) == "p | q & r");
  CHECK(render(F("p | (q | r)")) == "p | (q | r)");
  CHECK(render(F("p & q | r")) == "p & q | r");
  CHECK(render(F("p & ~p & @p")) == "p & ~p & @p");
  CHECK(render(F("#p"), RenderStyle::Unicode) == "•p");
  CHECK(render(F("~p ∨ q"), RenderStyle::Unicode) == "¬p ∨ q");
}

TEST_CASE("round trip: parse(render(f)) == f") {
  GenSpec spec;
  spec.seed = 7;
  spec.atom_count = 4;
  spec.max_depth = 6;
  std::mt19937_64 rng(spec.seed);
  for (int i = 0; i < 500; ++i) {
    Formula f = generate_formula(rng, spec);
    CHECK(parse(render(f, RenderStyle::Ascii)) == f);
    CHECK(parse(render(f, RenderStyle::Unicode)) == f);
  }
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(F(""), ParseError);
  CHECK_THROWS_AS(F("   "), ParseError);
  CHECK_THROWS_AS(F("p &"), ParseError);
  CHECK_THROWS_AS(F("(p"), ParseError);
  CHECK_THROWS_AS(F("p q"), ParseError);
  CHECK_THROWS_AS(F("| p"), ParseError);
  CHECK_THROWS_AS(F("sim"), ParseError);
  CHECK_THROWS_AS(F("bot()"), ParseError);
  CHECK_THROWS_AS(F("p ->"), ParseError);

  try {
    F("p q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("formula lists") {
  CHECK(FL("").empty());
  CHECK(FL("   ").empty());
  CHECK(FL("p") == std::vector<Formula>{F("p")});
  CHECK(FL("p, ~p | q") == std::vector<Formula>{F("p"), F("~p | q")});
  CHECK(FL("bot(p), q").size() == 2);
  CHECK_THROWS_AS(FL("p,,q"), ParseError);
  CHECK_THROWS_AS(FL(",p"), ParseError);
}
