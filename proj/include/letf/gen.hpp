// ============================================================================
// letf/gen.hpp — seeded random formula and sequent generation
// ============================================================================

#ifndef LETF_GEN_HPP
#define LETF_GEN_HPP

#include <cstdint>
#include <random>

#include "letf/corpus.hpp"
#include "letf/formula.hpp"

namespace letf {

struct ConnectiveWeights {
  int neg = 1;
  int conj = 1;
  int disj = 1;
  int circ = 1;
  int bullet = 1;

  int total() const { return neg + conj + disj + circ + bullet; }
};

struct GenSpec {
  std::uint64_t seed = 0;
  int atom_count = 3;
  int max_depth = 4;
  ConnectiveWeights weights{};
  int premise_count = 2;

  // Throws std::invalid_argument on nonsense (no atoms, negative or all-zero
  // weights, negative depth or premise count).
  void validate() const;
};

// Atom names p, q, r, ... then x11, x12, ... past 'z'.
std::string gen_atom_name(int index);

// One random formula of depth ≤ spec.max_depth over the first
// spec.atom_count atoms.  Sampling uses rng() % n throughout, so results
// are identical across platforms for a fixed seed.
Formula generate_formula(std::mt19937_64& rng, const GenSpec& spec);

// n sequents of spec.premise_count premises each; deterministic per seed.
std::vector<Sequent> generate_sequents(const GenSpec& spec, int n);

}  // namespace letf

#endif  // LETF_GEN_HPP
