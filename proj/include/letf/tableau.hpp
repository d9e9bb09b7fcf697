// ============================================================================
// letf/tableau.hpp — signed analytic tableaux for LET_F
// ============================================================================
//
// Thirteen rules drive the engine.  Non-branching rules extend the current
// branch; branching rules fork it:
//
//   R1   1(A∧B)    ⟶ 1(A), 1(B)          R2   0(A∧B)    ⟶ 0(A) | 0(B)
//   R3   1(¬(A∧B)) ⟶ 1(¬A) | 1(¬B)       R4   0(¬(A∧B)) ⟶ 0(¬A), 0(¬B)
//   R5   1(A∨B)    ⟶ 1(A) | 1(B)         R6   0(A∨B)    ⟶ 0(A), 0(B)
//   R7   1(¬(A∨B)) ⟶ 1(¬A), 1(¬B)        R8   0(¬(A∨B)) ⟶ 0(¬A) | 0(¬B)
//   R9   1(¬¬A)    ⟶ 1(A)                R10  0(¬¬A)    ⟶ 0(A)
//   R11  1(∘A)     ⟶ 1(A), 0(¬A) | 0(A), 1(¬A)
//   R12  1(•A)     ⟶ 0(∘A)               R13  0(•A)     ⟶ 1(∘A)
//
// No rule exists for literals, 0(∘A), 1/0(¬∘A) or 1/0(¬•A); those signed
// formulas are terminal.  A branch closes when the same formula occurs with
// both signs; the check is syntactic identity, so 1(¬¬p) and 0(p) close only
// after R9 fires.  Every rule output is strictly simpler than its input,
// which makes expansion terminate, and stays inside the generalized
// subformulas of the root set, which makes the procedure analytic.
//
// expand() always runs to a terminated tableau.  A sequent Γ ⊢ A is provable
// iff the tableau for {1(B) : B ∈ Γ} ∪ {0(A)} is closed; an open branch of a
// terminated tableau yields a countermodel (see letf/countermodel.hpp).
//
// ============================================================================

#ifndef LETF_TABLEAU_HPP
#define LETF_TABLEAU_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "letf/formula.hpp"
#include "letf/semantics.hpp"

namespace letf {

// ── Rules ───────────────────────────────────────────────────────────────────

enum class RuleId : std::uint8_t {
  R1 = 1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13
};

inline int rule_number(RuleId r) { return static_cast<int>(r); }

bool is_branching(RuleId r) noexcept;  // R2, R3, R5, R8, R11

// The rule that fires on sf, if any.
std::optional<RuleId> applicable_rule(const SignedFormula& sf) noexcept;

// The extension sets produced by rule on sf: one set for a non-branching
// rule, two for a branching one.  Throws std::invalid_argument when the rule
// does not match the formula shape.
std::vector<std::vector<SignedFormula>> apply_rule(RuleId rule, const SignedFormula& sf);

// ── Tableau structure ───────────────────────────────────────────────────────

struct TableauNode {
  SignedFormula sf;
  int parent = -1;               // previous node on the branch; -1 for the first
  int source = -1;               // node whose expansion produced this one
  std::optional<RuleId> rule;    // the rule that produced it
  std::vector<int> children;
};

enum class BranchStatus : std::uint8_t { Open, Closed };

struct Branch {
  std::vector<int> nodes;     // node ids, root to leaf
  std::vector<int> expanded;  // node ids a rule was applied to on this branch
  BranchStatus status = BranchStatus::Open;
  std::optional<std::pair<int, int>> closure;  // the 1(F)/0(F) pair, ascending ids

  bool is_closed() const noexcept { return status == BranchStatus::Closed; }
};

// First pair of identical formulas with opposite signs, if any.
bool has_closing_pair(std::span<const SignedFormula> sfs);

class Tableau {
 public:
  const std::vector<TableauNode>& nodes() const noexcept { return nodes_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }
  std::size_t initial_count() const noexcept { return initial_count_; }

  // All branches closed (expansion always terminates, so a Tableau is
  // always a terminated tableau).
  bool closed() const noexcept { return closed_; }

  std::vector<SignedFormula> branch_formulas(const Branch& b) const;

 private:
  friend class Expander;
  std::vector<TableauNode> nodes_;
  std::vector<Branch> branches_;  // creation (left-to-right) order
  std::size_t initial_count_ = 0;
  bool closed_ = false;
};

// ── Expansion ───────────────────────────────────────────────────────────────

enum class Strategy : std::uint8_t {
  // Earliest-inserted pending node first, non-branching rules before
  // branching ones.  Deterministic; the default.
  FifoNonBranchingFirst,
  // Uniformly random pending node each step; the verdict must not change.
  // Test hook for strategy independence.
  RandomFair,
};

struct ExpandOptions {
  Strategy strategy = Strategy::FifoNonBranchingFirst;
  std::uint64_t seed = 0;  // RandomFair only
};

// Builds the terminated tableau for the given root set.  Duplicate signed
// formulas are suppressed per branch; a branch stops expanding the moment
// it closes.
Tableau expand(std::span<const SignedFormula> initial, const ExpandOptions& opts = {});

// ── Decision procedures ─────────────────────────────────────────────────────

enum class Verdict : std::uint8_t { Provable, NotProvable };

struct ProofResult {
  Verdict verdict;
  Tableau tableau;
  std::vector<int> open_branches;  // indexes into tableau.branches()

  bool provable() const noexcept { return verdict == Verdict::Provable; }
};

// Γ ⊢ A: tableau for {1(B) : B ∈ premises} ∪ {0(conclusion)}.
ProofResult prove(std::span<const Formula> premises, const Formula& conclusion,
                  const ExpandOptions& opts = {});

struct SatResult {
  bool satisfiable;
  Tableau tableau;
  std::optional<int> witness_branch;  // first open branch
  std::optional<Valuation> witness;   // its induced valuation
};

// Joint satisfiability of fs: tableau for {1(F) : F ∈ fs}.
SatResult check_sat(std::span<const Formula> fs, const ExpandOptions& opts = {});

// The premises that contributed to closure: those whose root node was
// expanded, or sits in a closing pair, on at least one branch.  Re-proving
// from the result is checked to still succeed.
std::vector<Formula> prune(const ProofResult& result, std::span<const Formula> premises);

// Every non-root node's formula is a generalized subformula of (or equal to)
// some root formula.
bool check_analyticity(const Tableau& t);

}  // namespace letf

#endif  // LETF_TABLEAU_HPP
