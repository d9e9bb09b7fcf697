#include <doctest.h>

#include <set>
#include <sstream>

#include "letf/bench.hpp"
#include "letf/corpus.hpp"
#include "letf/gen.hpp"
#include "test_util.hpp"

using namespace letf;
using letf::test::F;
using letf::test::FL;

TEST_CASE("sequent parsing and printing") {
  Sequent s = parse_sequent("p, ~p | q |- q");
  CHECK(s.premises == FL("p, ~p | q"));
  CHECK(s.conclusion == F("q"));
  CHECK(s.text() == "p, ~p | q |- q");

  Sequent empty = parse_sequent("|- @p | #p");
  CHECK(empty.premises.empty());
  CHECK(empty.text() == "|- @p | #p");

  CHECK_THROWS_AS(parse_sequent("p, q"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p |-"), ParseError);
}

TEST_CASE("corpus lines: verdicts, notes, and '#' disambiguation") {
  std::istringstream in(
      "# a full-line comment\n"
      "\n"
      "|- @p | #p => provable # bullet survives, note starts at spaced '#'\n"
      "p, ~p |- q => not_provable\n"
      "p |- p\n"
      "#p |- #p => provable\n");
  auto entries = parse_corpus(in);
  REQUIRE(entries.size() == 4);

  CHECK(entries[0].sequent.conclusion == F("@p | #p"));
  CHECK(entries[0].expected == Verdict::Provable);
  CHECK(entries[0].note == "bullet survives, note starts at spaced '#'");
  CHECK(entries[0].line == 3);

  CHECK(entries[1].expected == Verdict::NotProvable);
  CHECK(!entries[2].expected.has_value());
  CHECK(entries[3].sequent.conclusion == F("#p"));

  std::istringstream bad("p |- q => maybe\n");
  CHECK_THROWS_AS(parse_corpus(bad), ParseError);
}

TEST_CASE("run_corpus checks expectations") {
  std::istringstream in(
      "bot(p) |- q => provable\n"
      "p |- q => provable # deliberately wrong\n"
      "p |- p\n");
  auto entries = parse_corpus(in);
  CorpusReport report = run_corpus(entries);
  REQUIRE(report.outcomes.size() == 3);
  CHECK(report.outcomes[0].pass);
  CHECK(!report.outcomes[1].pass);
  CHECK(report.outcomes[2].pass);  // no expectation: informational
  CHECK(report.failures == 1);
}

TEST_CASE("bundled corpus parses and passes") {
  auto entries = load_corpus_file(LETF_CORPUS_PATH);
  CHECK(entries.size() == 24);
  for (const auto& e : entries) CHECK(e.expected.has_value());
  CHECK(run_corpus(entries).all_passed());
}

TEST_CASE("bundled corpus verdicts agree with the enumeration oracle") {
  for (const auto& e : load_corpus_file(LETF_CORPUS_PATH)) {
    bool expected_valid = *e.expected == Verdict::Provable;
    CHECK(entails(e.sequent.premises, e.sequent.conclusion).valid == expected_valid);
  }
}

TEST_CASE("generator determinism and bounds") {
  GenSpec spec;
  spec.seed = 31337;
  spec.atom_count = 2;
  spec.max_depth = 3;
  spec.premise_count = 2;

  auto a = generate_sequents(spec, 20);
  auto b = generate_sequents(spec, 20);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].text() == b[i].text());

  std::set<std::string> atoms_seen;
  auto record = [&](auto&& self, const Formula& f) -> int {
    switch (f.kind()) {
      case Conn::Atom:
        atoms_seen.insert(f.atom_name());
        return 0;
      case Conn::Neg:
      case Conn::Circ:
      case Conn::Bullet:
        return 1 + self(self, f.child());
      default:
        return 1 + std::max(self(self, f.lhs()), self(self, f.rhs()));
    }
  };
  for (const Sequent& s : a) {
    for (const Formula& p : s.premises) CHECK(record(record, p) <= spec.max_depth);
    CHECK(record(record, s.conclusion) <= spec.max_depth);
  }
  for (const auto& name : atoms_seen) CHECK((name == "p" || name == "q"));
}

TEST_CASE("generator honors zeroed connective weights") {
  GenSpec fde;
  fde.seed = 5;
  fde.atom_count = 1;
  fde.max_depth = 4;
  fde.weights = {3, 3, 3, 0, 0};  // no @ / #
  fde.premise_count = 1;

  for (const Sequent& s : generate_sequents(fde, 50)) {
    std::string text = s.text();
    CHECK(text.find('@') == std::string::npos);
    CHECK(text.find('#') == std::string::npos);
  }
}

TEST_CASE("degenerate spec: one atom, depth zero") {
  GenSpec tiny;
  tiny.seed = 3;
  tiny.atom_count = 1;
  tiny.max_depth = 0;
  tiny.premise_count = 1;
  for (const Sequent& s : generate_sequents(tiny, 10)) CHECK(s.text() == "p |- p");
}

TEST_CASE("no explosion in the pure FDE fragment") {
  // Without @ and #, positive-signed rules only ever emit positive signs,
  // so A, ~A against a fresh atom can never close.
  GenSpec fde;
  fde.seed = 8;
  fde.atom_count = 2;
  fde.max_depth = 4;
  fde.weights = {3, 3, 3, 0, 0};
  std::mt19937_64 rng(fde.seed);
  for (int i = 0; i < 60; ++i) {
    Formula a = generate_formula(rng, fde);
    std::vector<Formula> premises{a, Formula::neg(a)};
    CHECK(!prove(premises, F("r")).provable());
    CHECK(!entails(premises, F("r")).valid);
  }
}

TEST_CASE("generator rejects nonsense specs") {
  GenSpec bad;
  bad.atom_count = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  GenSpec zero_weights;
  zero_weights.weights = {0, 0, 0, 0, 0};
  CHECK_THROWS_AS(zero_weights.validate(), std::invalid_argument);

  GenSpec negative;
  negative.weights.circ = -1;
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}

TEST_CASE("bench records and CSV") {
  GenSpec spec;
  spec.seed = 77;
  spec.atom_count = 2;
  spec.max_depth = 3;
  spec.premise_count = 2;
  std::vector<GenSpec> specs{spec};

  auto records = run_bench(specs, 15, {.cap = 20, .mode = ExecMode::Auto});
  REQUIRE(records.size() == 15);
  for (const auto& r : records) {
    if (r.skipped) continue;
    CHECK((r.verdict == "provable" || r.verdict == "not_provable"));
    CHECK(r.tableau_nodes > 0);
    CHECK(r.matrix_columns > 0);
  }

  // determinism: same specs, same sequents and verdicts (times aside)
  auto again = run_bench(specs, 15, {.cap = 20, .mode = ExecMode::Auto});
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].sequent_text == again[i].sequent_text);
    CHECK(records[i].verdict == again[i].verdict);
  }

  std::ostringstream csv;
  write_bench_csv(csv, records);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "seed,sequent_text,verdict,tableau_ms,tableau_nodes,matrix_ms,matrix_columns");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 15);
}

TEST_CASE("bench config loading") {
  std::istringstream in(R"({
    "n_per_spec": 4,
    "specs": [
      { "atom_count": 2, "max_depth": 2,
        "weights": { "neg": 1, "and": 1, "or": 1, "circ": 0, "bullet": 0 } },
      { "seed": 9, "premise_count": 0 }
    ]
  })");
  BenchConfig cfg = load_bench_config(in, 100);
  CHECK(cfg.n_per_spec == 4);
  REQUIRE(cfg.specs.size() == 2);
  CHECK(cfg.specs[0].seed == 100);  // base seed + index
  CHECK(cfg.specs[0].weights.circ == 0);
  CHECK(cfg.specs[1].seed == 9);
  CHECK(cfg.specs[1].premise_count == 0);

  std::istringstream empty(R"({"specs": []})");
  CHECK_THROWS_AS(load_bench_config(empty, 0), std::invalid_argument);
}
