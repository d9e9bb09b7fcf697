#include "letf/countermodel.hpp"

#include <unordered_set>
#include <vector>

#include "letf/parser.hpp"

namespace letf {

namespace {

bool map_bit(const std::map<Formula, bool>& m, const Formula& key) {
  auto it = m.find(key);
  return it != m.end() && it->second;
}

}  // namespace

bool SemiValuation::literal_bit(const Formula& lit) const {
  return map_bit(literal_bits, lit);
}
bool SemiValuation::circ_bit(const Formula& a) const { return map_bit(circ_bits, a); }
bool SemiValuation::negcirc_bit(const Formula& a) const {
  return map_bit(negcirc_bits, a);
}
bool SemiValuation::negbullet_bit(const Formula& a) const {
  return map_bit(negbullet_bits, a);
}

SemiValuation extract_semi_valuation(const Tableau& t, const Branch& b) {
  if (b.is_closed())
    throw std::invalid_argument("cannot extract a semi-valuation from a closed branch");

  std::unordered_set<SignedFormula, SignedFormulaHash> on_branch;
  std::unordered_set<int> expanded(b.expanded.begin(), b.expanded.end());
  std::vector<Formula> formulas;
  formulas.reserve(b.nodes.size());
  for (int id : b.nodes) {
    const SignedFormula& sf = t.nodes()[static_cast<std::size_t>(id)].sf;
    on_branch.insert(sf);
    formulas.push_back(sf.formula);
    if (applicable_rule(sf) && !expanded.count(id))
      throw std::invalid_argument("branch is not terminated: a rule is still applicable");
  }

  SemiValuation s;
  s.domain = std::make_shared<Domain>(Domain::closure(formulas));
  for (const SemanticAtom& a : s.domain->atoms()) {
    switch (a.kind) {
      case AtomKind::PosLit:
        s.literal_bits[a.subject] = on_branch.count(one(a.subject)) != 0;
        break;
      case AtomKind::NegLit: {
        Formula lit = Formula::neg(a.subject);
        s.literal_bits[lit] = on_branch.count(one(lit)) != 0;
        break;
      }
      case AtomKind::CircOf:
        s.circ_bits[a.subject] = on_branch.count(one(Formula::circ(a.subject))) != 0;
        break;
      case AtomKind::NegCircOf:
        s.negcirc_bits[a.subject] =
            on_branch.count(one(Formula::neg(Formula::circ(a.subject)))) != 0;
        break;
      case AtomKind::NegBulletOf:
        s.negbullet_bits[a.subject] =
            on_branch.count(one(Formula::neg(Formula::bullet(a.subject)))) != 0;
        break;
    }
  }
  return s;
}

Valuation induced_valuation(const SemiValuation& s) {
  std::uint64_t bits = 0;
  const auto& atoms = s.domain->atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const SemanticAtom& a = atoms[i];
    bool bit = false;
    switch (a.kind) {
      case AtomKind::PosLit: bit = s.literal_bits.at(a.subject); break;
      case AtomKind::NegLit: bit = s.literal_bits.at(Formula::neg(a.subject)); break;
      case AtomKind::CircOf: bit = s.circ_bits.at(a.subject); break;
      case AtomKind::NegCircOf: bit = s.negcirc_bits.at(a.subject); break;
      case AtomKind::NegBulletOf: bit = s.negbullet_bits.at(a.subject); break;
    }
    if (bit) bits |= 1ull << i;
  }
  Valuation v(s.domain, bits);
  if (!v.is_admissible())
    throw std::logic_error("induced assignment violates the classicality constraint");
  return v;
}

bool verify_countermodel(const Valuation& v, std::span<const Formula> premises,
                         const Formula& conclusion) {
  std::vector<Formula> sequent(premises.begin(), premises.end());
  sequent.push_back(conclusion);
  const Domain cover = Domain::closure(sequent);
  for (const SemanticAtom& a : cover.atoms())
    if (!v.domain().contains(a))
      throw DomainCoverageError("sequent consults an atom outside the valuation domain: " +
                                render(a.as_formula()));

  if (!v.is_admissible()) return false;
  for (const Formula& p : premises)
    if (!v.evaluate(p)) return false;
  return !v.evaluate(conclusion);
}

}  // namespace letf
