#include "letf/bench.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "letf/tableau.hpp"

namespace letf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::vector<BenchRecord> run_bench(std::span<const GenSpec> specs, int n_per_spec,
                                   const EnumOptions& opts) {
  std::vector<BenchRecord> records;
  for (const GenSpec& spec : specs) {
    for (const Sequent& s : generate_sequents(spec, n_per_spec)) {
      BenchRecord rec;
      rec.seed = spec.seed;
      rec.sequent_text = s.text();

      auto t0 = Clock::now();
      ProofResult proof = prove(s.premises, s.conclusion);
      rec.tableau_ms = ms_since(t0);
      rec.tableau_nodes = proof.tableau.nodes().size();

      try {
        auto t1 = Clock::now();
        EntailResult oracle = entails(s.premises, s.conclusion, opts);
        rec.matrix_ms = ms_since(t1);
        rec.matrix_columns = oracle.valuation_count;

        if (proof.provable() != oracle.valid)
          throw std::logic_error("verdict disagreement on sequent: " + rec.sequent_text);
        rec.verdict = proof.provable() ? "provable" : "not_provable";
      } catch (const CapExceededError& e) {
        rec.skipped = true;
        rec.verdict = std::string("skipped(") + e.what() + ")";
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "seed,sequent_text,verdict,tableau_ms,tableau_nodes,matrix_ms,matrix_columns\n";
  for (const BenchRecord& r : records) {
    out << r.seed << ',' << csv_field(r.sequent_text) << ',' << csv_field(r.verdict);
    if (r.skipped) {
      out << ",,,,\n";
      continue;
    }
    out << ',' << r.tableau_ms << ',' << r.tableau_nodes << ',' << r.matrix_ms << ','
        << r.matrix_columns << '\n';
  }
}

BenchConfig load_bench_config(std::istream& in, std::uint64_t base_seed) {
  nlohmann::json j = nlohmann::json::parse(in);
  BenchConfig cfg;
  cfg.n_per_spec = j.value("n_per_spec", 10);
  if (cfg.n_per_spec < 1) throw std::invalid_argument("n_per_spec must be at least 1");

  std::size_t index = 0;
  for (const auto& js : j.at("specs")) {
    GenSpec spec;
    spec.seed = js.value("seed", base_seed + index);
    spec.atom_count = js.value("atom_count", 3);
    spec.max_depth = js.value("max_depth", 4);
    spec.premise_count = js.value("premise_count", 2);
    if (js.contains("weights")) {
      const auto& w = js.at("weights");
      spec.weights.neg = w.value("neg", 1);
      spec.weights.conj = w.value("and", 1);
      spec.weights.disj = w.value("or", 1);
      spec.weights.circ = w.value("circ", 1);
      spec.weights.bullet = w.value("bullet", 1);
    }
    spec.validate();
    cfg.specs.push_back(spec);
    ++index;
  }
  if (cfg.specs.empty()) throw std::invalid_argument("bench config has no specs");
  return cfg;
}

BenchConfig load_bench_config_file(const std::string& path, std::uint64_t base_seed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bench spec file: " + path);
  return load_bench_config(in, base_seed);
}

}  // namespace letf
