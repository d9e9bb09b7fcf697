// letf — decision procedures for the logic LET_F on the command line.
//
//   letf prove "<premises>" "<conclusion>"   tableau proof search
//   letf sat "<formulas>"                    joint satisfiability
//   letf countermodel "<premises>" "<concl>" refuting valuation if any
//   letf matrix "<formulas>"                 quasi-matrix over the formulas
//   letf bench <spec.json>                   tableau vs enumeration timings (CSV)
//   letf corpus run <file>                   run a corpus file, check verdicts
//
// Exit codes: 0 provable/valid/satisfiable/all entries pass; 1 the negative
// verdict (or a failing entry); 2 parse or usage error; 3 enumeration cap
// exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "letf/bench.hpp"
#include "letf/corpus.hpp"
#include "letf/countermodel.hpp"
#include "letf/export.hpp"
#include "letf/gen.hpp"
#include "letf/parser.hpp"
#include "letf/semantics.hpp"
#include "letf/tableau.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  bool use_unicode = false;
  bool do_prune = false;
  std::size_t cap = 24;
  std::uint64_t seed = 0;
};

letf::RenderStyle style_of(const Options& o) {
  return o.use_unicode ? letf::RenderStyle::Unicode : letf::RenderStyle::Ascii;
}

letf::EnumOptions enum_opts(const Options& o) {
  letf::EnumOptions e;
  e.cap = o.cap;
  return e;
}

[[noreturn]] void usage_error(const std::string& msg) {
  throw CLI::ValidationError(msg);
}

void require_readable(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) usage_error("cannot open file: " + path);
}

int cmd_prove(const Options& opt, const std::string& premises_text,
              const std::string& conclusion_text, bool model_only) {
  auto premises = letf::parse_formula_list(premises_text);
  letf::Formula conclusion = letf::parse(conclusion_text);
  letf::ProofResult result = letf::prove(premises, conclusion);
  const auto style = style_of(opt);

  std::optional<letf::Valuation> countermodel;
  if (!result.provable()) {
    const letf::Branch& open =
        result.tableau.branches()[static_cast<std::size_t>(result.open_branches.front())];
    countermodel =
        letf::induced_valuation(letf::extract_semi_valuation(result.tableau, open));
  }
  std::vector<letf::Formula> used;
  if (opt.do_prune && result.provable()) used = letf::prune(result, premises);

  if (opt.format == "dot") {
    std::cout << letf::proof_tree_dot(result.tableau, style);
  } else if (opt.format == "json") {
    json j;
    j["verdict"] = result.provable() ? "provable" : "not_provable";
    if (!model_only) j["tableau"] = json::parse(letf::proof_tree_json(result.tableau));
    if (countermodel)
      j["countermodel"] =
          json::parse(letf::countermodel_json(*countermodel, premises, conclusion));
    if (opt.do_prune && result.provable()) {
      j["used_premises"] = json::array();
      for (const auto& f : used) j["used_premises"].push_back(letf::render(f));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (result.provable() ? "provable" : "not provable") << '\n';
    if (!model_only) std::cout << letf::proof_tree_text(result.tableau, style);
    if (model_only && result.provable())
      std::cout << "no countermodel: the sequent is provable\n";
    if (countermodel) {
      std::cout << "countermodel:\n"
                << letf::countermodel_text(*countermodel, premises, conclusion, style);
    }
    if (opt.do_prune && result.provable()) {
      std::cout << "used premises:";
      for (const auto& f : used) std::cout << ' ' << letf::render(f, style);
      std::cout << '\n';
    }
  }
  return result.provable() ? 0 : 1;
}

int cmd_sat(const Options& opt, const std::string& formulas_text) {
  auto formulas = letf::parse_formula_list(formulas_text);
  letf::SatResult result = letf::check_sat(formulas);
  const auto style = style_of(opt);

  if (opt.format == "dot") {
    std::cout << letf::proof_tree_dot(result.tableau, style);
  } else if (opt.format == "json") {
    json j;
    j["satisfiable"] = result.satisfiable;
    j["tableau"] = json::parse(letf::proof_tree_json(result.tableau));
    if (result.witness) {
      json atoms = json::array();
      const auto& dom = result.witness->domain();
      for (std::size_t i = 0; i < dom.size(); ++i)
        atoms.push_back({{"atom", letf::semantic_atom_text(dom.at(i))},
                         {"value", result.witness->bit(i) ? 1 : 0}});
      j["witness"] = std::move(atoms);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (result.satisfiable ? "satisfiable" : "unsatisfiable") << '\n';
    if (result.witness)
      std::cout << letf::valuation_text(*result.witness, style);
    else
      std::cout << letf::proof_tree_text(result.tableau, style);
  }
  return result.satisfiable ? 0 : 1;
}

int cmd_matrix(const Options& opt, const std::string& formulas_text) {
  auto formulas = letf::parse_formula_list(formulas_text);
  if (formulas.empty()) usage_error("matrix requires at least one formula");
  letf::QuasiMatrix m = letf::quasi_matrix(formulas, enum_opts(opt));
  if (opt.format == "csv")
    std::cout << letf::matrix_csv(m);
  else if (opt.format == "json")
    std::cout << letf::matrix_json(m) << '\n';
  else if (opt.format == "dot")
    usage_error("matrix has no dot rendering");
  else
    std::cout << letf::matrix_text(m, style_of(opt));
  return 0;
}

int cmd_bench(const Options& opt, const std::string& spec_path) {
  require_readable(spec_path);
  letf::BenchConfig cfg = letf::load_bench_config_file(spec_path, opt.seed);
  auto records = letf::run_bench(cfg.specs, cfg.n_per_spec, enum_opts(opt));
  letf::write_bench_csv(std::cout, records);
  return 0;
}

int cmd_corpus_run(const Options& opt, const std::string& path) {
  require_readable(path);
  auto entries = letf::load_corpus_file(path);
  letf::CorpusReport report = letf::run_corpus(entries);

  if (opt.format == "json") {
    json j = json::array();
    for (const auto& o : report.outcomes) {
      json jo{{"line", o.entry.line},
              {"sequent", o.entry.sequent.text()},
              {"verdict", o.actual == letf::Verdict::Provable ? "provable" : "not_provable"},
              {"pass", o.pass}};
      if (!o.entry.note.empty()) jo["note"] = o.entry.note;
      j.push_back(std::move(jo));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& o : report.outcomes) {
      std::cout << (o.pass ? "ok   " : "FAIL ") << "line " << o.entry.line << ": "
                << o.entry.sequent.text(style_of(opt)) << " => "
                << (o.actual == letf::Verdict::Provable ? "provable" : "not_provable");
      if (!o.entry.note.empty()) std::cout << "  # " << o.entry.note;
      std::cout << '\n';
    }
    std::cout << report.outcomes.size() << " entries, " << report.failures
              << " failure(s)\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"decision procedures for the logic LET_F"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot", "csv"}))
      ->capture_default_str();
  app.add_flag("--unicode", opt.use_unicode, "render connectives as ¬ ∧ ∨ ∘ •");
  app.add_option("--cap", opt.cap, "semantic-atom cap for enumeration")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "base seed for bench specs without one")
      ->capture_default_str();

  std::string premises_text, conclusion_text, formulas_text, path;

  CLI::App* prove = app.add_subcommand("prove", "tableau proof search for a sequent");
  prove->add_option("premises", premises_text, "comma-separated premises (may be empty)")
      ->required();
  prove->add_option("conclusion", conclusion_text, "conclusion formula")->required();
  prove->add_flag("--prune", opt.do_prune, "also report the premises used by the proof");

  CLI::App* sat = app.add_subcommand("sat", "joint satisfiability of formulas");
  sat->add_option("formulas", formulas_text, "comma-separated formulas")->required();

  CLI::App* cm = app.add_subcommand("countermodel", "refuting valuation for a sequent");
  cm->add_option("premises", premises_text, "comma-separated premises (may be empty)")
      ->required();
  cm->add_option("conclusion", conclusion_text, "conclusion formula")->required();

  CLI::App* matrix = app.add_subcommand("matrix", "quasi-matrix over formulas");
  matrix->add_option("formulas", formulas_text, "comma-separated formulas")->required();

  CLI::App* bench = app.add_subcommand("bench", "tableau vs enumeration timing run");
  bench->add_option("spec", path, "JSON bench spec file")->required();

  CLI::App* corpus = app.add_subcommand("corpus", "corpus file operations");
  corpus->require_subcommand(1);
  CLI::App* corpus_run = corpus->add_subcommand("run", "run a corpus file");
  corpus_run->add_option("file", path, "corpus file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(prove)) return cmd_prove(opt, premises_text, conclusion_text, false);
    if (app.got_subcommand(sat)) return cmd_sat(opt, formulas_text);
    if (app.got_subcommand(cm)) return cmd_prove(opt, premises_text, conclusion_text, true);
    if (app.got_subcommand(matrix)) return cmd_matrix(opt, formulas_text);
    if (app.got_subcommand(bench)) return cmd_bench(opt, path);
    if (app.got_subcommand(corpus)) return cmd_corpus_run(opt, path);
  } catch (const letf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad spec file: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const letf::CapExceededError& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
