// ============================================================================
// letf/bench.hpp — tableau vs quasi-matrix timing harness
// ============================================================================
//
// Each generated sequent is decided twice: by the tableau engine and by the
// brute-force enumeration oracle.  The two verdicts must agree — any
// disagreement is an engine defect and aborts the run.  Timings are
// informational; CSV columns:
//
//   seed,sequent_text,verdict,tableau_ms,tableau_nodes,matrix_ms,matrix_columns
//
// ============================================================================

#ifndef LETF_BENCH_HPP
#define LETF_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "letf/gen.hpp"
#include "letf/semantics.hpp"

namespace letf {

struct BenchRecord {
  std::uint64_t seed = 0;
  std::string sequent_text;
  std::string verdict;  // "provable", "not_provable", or "skipped(...)"
  bool skipped = false;
  double tableau_ms = 0.0;
  std::size_t tableau_nodes = 0;
  double matrix_ms = 0.0;
  std::uint64_t matrix_columns = 0;
};

// Sequents that outgrow the enumeration cap become skipped records; a
// verdict disagreement throws std::logic_error.
std::vector<BenchRecord> run_bench(std::span<const GenSpec> specs, int n_per_spec,
                                   const EnumOptions& opts = {});

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

struct BenchConfig {
  std::vector<GenSpec> specs;
  int n_per_spec = 10;
};

// JSON spec file:
//   { "n_per_spec": 25,
//     "specs": [ { "seed": 1, "atom_count": 3, "max_depth": 4,
//                  "premise_count": 2,
//                  "weights": { "neg": 3, "and": 3, "or": 3,
//                               "circ": 2, "bullet": 1 } } ] }
// Every field has a default; a spec without "seed" gets base_seed + index.
BenchConfig load_bench_config(std::istream& in, std::uint64_t base_seed);
BenchConfig load_bench_config_file(const std::string& path, std::uint64_t base_seed);

}  // namespace letf

#endif  // LETF_BENCH_HPP
