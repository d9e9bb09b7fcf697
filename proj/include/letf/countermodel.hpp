// ============================================================================
// letf/countermodel.hpp — countermodels from open branches
// ============================================================================
//
// An open branch of a terminated tableau determines a semi-valuation: 1(l)
// on the branch makes the literal l true and every other literal false;
// 1(∘A) makes ∘A true and •A false, otherwise ∘A is false and •A true; ¬∘A
// and ¬•A are true exactly when they occur positively.  Lifting the
// semi-valuation compositionally yields a full valuation that agrees with
// every label on the branch, which is what makes an open tableau a
// refutation: the induced valuation satisfies the premises and falsifies
// the conclusion.
//
// ============================================================================

#ifndef LETF_COUNTERMODEL_HPP
#define LETF_COUNTERMODEL_HPP

#include <map>
#include <memory>
#include <span>
#include <stdexcept>

#include "letf/formula.hpp"
#include "letf/semantics.hpp"
#include "letf/tableau.hpp"

namespace letf {

struct DomainCoverageError : std::runtime_error {
  explicit DomainCoverageError(const std::string& what) : std::runtime_error(what) {}
};

struct SemiValuation {
  std::map<Formula, bool> literal_bits;    // keyed by the literal itself: p or ¬p
  std::map<Formula, bool> circ_bits;       // keyed by A, the value of ∘A
  std::map<Formula, bool> negcirc_bits;    // keyed by A, the value of ¬∘A
  std::map<Formula, bool> negbullet_bits;  // keyed by A, the value of ¬•A
  std::shared_ptr<const Domain> domain;

  // Lookups with the branch-reading defaults outside the stored domain:
  // an absent literal is 0, an absent ∘A is 0 (hence •A is 1), absent
  // ¬∘A / ¬•A are 0.
  bool literal_bit(const Formula& lit) const;
  bool circ_bit(const Formula& a) const;
  bool negcirc_bit(const Formula& a) const;
  bool negbullet_bit(const Formula& a) const;

  // v(•A) = 1 − v(∘A), always.
  bool bullet_bit(const Formula& a) const { return !circ_bit(a); }
};

// Reads the semi-valuation off an open branch.  Throws std::invalid_argument
// if the branch is closed or still has an unfired rule (not terminated).
SemiValuation extract_semi_valuation(const Tableau& t, const Branch& b);

// Lifts the semi-valuation to a Valuation over its domain.  An inadmissible
// result (classicality constraint violated) is impossible for a legal open
// branch and reported as std::logic_error.
Valuation induced_valuation(const SemiValuation& s);

// True iff v makes every premise 1, the conclusion 0, and is admissible.
// Throws DomainCoverageError when the sequent consults atoms outside v's
// domain.
bool verify_countermodel(const Valuation& v, std::span<const Formula> premises,
                         const Formula& conclusion);

}  // namespace letf

#endif  // LETF_COUNTERMODEL_HPP
