#include "letf/gen.hpp"

#include <stdexcept>

namespace letf {

void GenSpec::validate() const {
  if (atom_count < 1) throw std::invalid_argument("atom_count must be at least 1");
  if (max_depth < 0) throw std::invalid_argument("max_depth must be non-negative");
  if (premise_count < 0) throw std::invalid_argument("premise_count must be non-negative");
  if (weights.neg < 0 || weights.conj < 0 || weights.disj < 0 || weights.circ < 0 ||
      weights.bullet < 0)
    throw std::invalid_argument("connective weights must be non-negative");
  if (weights.total() == 0)
    throw std::invalid_argument("connective weights must not all be zero");
}

std::string gen_atom_name(int index) {
  if (index < 11) return std::string(1, static_cast<char>('p' + index));  // p..z
  return "x" + std::to_string(index);
}

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // keeps generation identical across standard libraries
}

Formula gen_at(std::mt19937_64& rng, const GenSpec& spec, int depth) {
  const int total = spec.weights.total();
  // A fixed leaf share keeps expected size finite well before the depth cap.
  const int leaf_weight = total / 2 + 1;
  if (depth == 0 ||
      pick(rng, static_cast<std::uint64_t>(total + leaf_weight)) < static_cast<std::uint64_t>(leaf_weight))
    return Formula::atom(
        gen_atom_name(static_cast<int>(pick(rng, static_cast<std::uint64_t>(spec.atom_count)))));

  int r = static_cast<int>(pick(rng, static_cast<std::uint64_t>(total)));
  if ((r -= spec.weights.neg) < 0) return Formula::neg(gen_at(rng, spec, depth - 1));
  if ((r -= spec.weights.conj) < 0)
    return Formula::conj(gen_at(rng, spec, depth - 1), gen_at(rng, spec, depth - 1));
  if ((r -= spec.weights.disj) < 0)
    return Formula::disj(gen_at(rng, spec, depth - 1), gen_at(rng, spec, depth - 1));
  if ((r -= spec.weights.circ) < 0) return Formula::circ(gen_at(rng, spec, depth - 1));
  return Formula::bullet(gen_at(rng, spec, depth - 1));
}

}  // namespace

Formula generate_formula(std::mt19937_64& rng, const GenSpec& spec) {
  spec.validate();
  return gen_at(rng, spec, spec.max_depth);
}

std::vector<Sequent> generate_sequents(const GenSpec& spec, int n) {
  spec.validate();
  if (n < 1) throw std::invalid_argument("sequent count must be at least 1");
  std::mt19937_64 rng(spec.seed);
  std::vector<Sequent> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Sequent s;
    s.premises.reserve(static_cast<std::size_t>(spec.premise_count));
    for (int p = 0; p < spec.premise_count; ++p)
      s.premises.push_back(gen_at(rng, spec, spec.max_depth));
    s.conclusion = gen_at(rng, spec, spec.max_depth);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace letf
