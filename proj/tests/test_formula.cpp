#include <doctest.h>

#include <random>

#include "letf/formula.hpp"
#include "letf/gen.hpp"
#include "test_util.hpp"

using namespace letf;
using letf::test::F;

TEST_CASE("complexity measure") {
  CHECK(F("p").complexity() == 0);
  CHECK(F("#p").complexity() == 3);
  CHECK(F("~(p | q)").complexity() == 2);
  CHECK(F("~p").complexity() == 1);
  CHECK(F("p & q").complexity() == 1);
  CHECK(F("@p").complexity() == 2);
  CHECK(F("@#~p").complexity() == 6);
  CHECK(F("bot(p)").complexity() == 5);  // p & ~p & @p
}

TEST_CASE("atom names are identifiers") {
  CHECK(Formula::atom("p_1").atom_name() == "p_1");
  CHECK_THROWS_AS(Formula::atom(""), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom("1p"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom("p q"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom("_p"), std::invalid_argument);
}

TEST_CASE("structural equality and ordering") {
  CHECK(F("p & q") == F("p & q"));
  CHECK(F("p & q") != F("q & p"));
  CHECK(F("~~p") != F("p"));
  CHECK(F("p & q").hash() == F("p & q").hash());

  // a strict weak order usable in std::set
  CHECK(F("p") < F("q"));
  CHECK(!(F("p") < F("p")));
  CHECK((F("p") < F("q")) != (F("q") < F("p")));
}

TEST_CASE("signed formula identity") {
  CHECK(one(F("p")) == one(F("p")));
  CHECK(one(F("p")) != zero(F("p")));
  CHECK(zero(F("p")).sign == Sign::Zero);
  CHECK(opposite(Sign::One) == Sign::Zero);
}

TEST_CASE("generalized subformulas: frozen sets") {
  auto gsub = [](const std::string& s) { return generalized_subformulas(F(s)); };

  CHECK(gsub("@p") == std::set<Formula>{F("p"), F("~p")});
  CHECK(gsub("#p") == std::set<Formula>{F("@p"), F("p"), F("~p")});
  CHECK(gsub("~(p & q)") ==
        std::set<Formula>{F("p & q"), F("p"), F("q"), F("~p"), F("~q")});
  CHECK(gsub("p") == std::set<Formula>{});
  CHECK(gsub("~~p") == std::set<Formula>{F("~p"), F("p")});
}

TEST_CASE("generalized subformulas: properties over random formulas") {
  GenSpec spec;
  spec.seed = 42;
  spec.atom_count = 3;
  spec.max_depth = 5;
  std::mt19937_64 rng(spec.seed);

  for (int i = 0; i < 300; ++i) {
    Formula f = generate_formula(rng, spec);
    auto subs = generalized_subformulas(f);

    CHECK(!subs.count(f));  // proper
    for (const Formula& g : subs)
      CHECK(g.complexity() < f.complexity());  // strictly simpler

    // finite and bounded: members are s, ~s or @s for subterms s of f
    CHECK(subs.size() <= 6u * static_cast<unsigned>(f.complexity()) + 3u);
  }
}
