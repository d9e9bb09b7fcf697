// ============================================================================
// letf/formula.hpp — formula AST for the logic LET_F
// ============================================================================
//
// LET_F is first-degree entailment (Belnap-Dunn logic) extended with a
// classicality operator ∘ and its dual, the non-classicality operator •.
// The AST therefore has six node kinds: atoms, ¬, ∧, ∨, ∘ and •.
//
// Formulas are immutable values backed by shared nodes.  Structural equality
// (with a cached hash as fast path) is the identity used everywhere: branch
// closure, set membership, countermodel lookups.  A structural total order
// is provided so formulas can live in ordered containers deterministically.
//
// ============================================================================

#ifndef LETF_FORMULA_HPP
#define LETF_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>

namespace letf {

enum class Conn : std::uint8_t { Atom, Neg, And, Or, Circ, Bullet };

class Formula {
 public:
  // Empty handle; valid() is false and all other accessors are off-limits.
  Formula() = default;

  static Formula atom(std::string name);
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula circ(Formula a);
  static Formula bullet(Formula a);

  bool valid() const noexcept { return node_ != nullptr; }
  Conn kind() const;
  const std::string& atom_name() const;  // Atom nodes only
  const Formula& child() const;          // Neg / Circ / Bullet
  const Formula& lhs() const;            // And / Or
  const Formula& rhs() const;            // And / Or

  std::size_t hash() const noexcept;

  // C(p)=0, C(¬A)=C(A)+1, C(A∧B)=C(A∨B)=C(A)+C(B)+1, C(∘A)=C(A)+2,
  // C(•A)=C(A)+3.  The +2/+3 steps make every rule output and every
  // generalized subformula strictly simpler, which is what grounds
  // termination of the tableau engine.
  int complexity() const noexcept;

  bool operator==(const Formula& o) const noexcept;
  bool operator!=(const Formula& o) const noexcept { return !(*this == o); }
  bool operator<(const Formula& o) const noexcept { return compare(o) < 0; }

  // Structural three-way comparison: connective rank, then atom name,
  // then children left to right.
  int compare(const Formula& o) const noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make_unary(Conn kind, Formula a, int step);
  static Formula make_binary(Conn kind, Formula a, Formula b);
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Conn kind;
  std::string name;  // Atom only
  Formula first;     // unary child, or left operand
  Formula second;    // right operand (And/Or only)
  std::size_t hash = 0;
  int complexity = 0;
};

inline Conn Formula::kind() const { return node_->kind; }
inline const std::string& Formula::atom_name() const { return node_->name; }
inline const Formula& Formula::child() const { return node_->first; }
inline const Formula& Formula::lhs() const { return node_->first; }
inline const Formula& Formula::rhs() const { return node_->second; }
inline std::size_t Formula::hash() const noexcept { return node_ ? node_->hash : 0; }
inline int Formula::complexity() const noexcept { return node_ ? node_->complexity : 0; }

// The proper generalized subformulas of f: immediate subformulas, ¬A and ¬B
// for a negated conjunction/disjunction, ¬A for ∘A, ∘A for •A, transitively
// closed.  f itself is not a member.  Every member has strictly smaller
// complexity than f.
std::set<Formula> generalized_subformulas(const Formula& f);

// ── Signed formulas ─────────────────────────────────────────────────────────

enum class Sign : std::uint8_t { Zero = 0, One = 1 };

inline Sign opposite(Sign s) { return s == Sign::One ? Sign::Zero : Sign::One; }

struct SignedFormula {
  Sign sign;
  Formula formula;

  bool operator==(const SignedFormula& o) const noexcept {
    return sign == o.sign && formula == o.formula;
  }
  bool operator!=(const SignedFormula& o) const noexcept { return !(*this == o); }
  bool operator<(const SignedFormula& o) const noexcept {
    if (sign != o.sign) return sign < o.sign;
    return formula < o.formula;
  }
  std::size_t hash() const noexcept {
    return formula.hash() * 2 + static_cast<std::size_t>(sign);
  }
};

inline SignedFormula one(Formula f) { return {Sign::One, std::move(f)}; }
inline SignedFormula zero(Formula f) { return {Sign::Zero, std::move(f)}; }

struct SignedFormulaHash {
  std::size_t operator()(const SignedFormula& sf) const noexcept { return sf.hash(); }
};

}  // namespace letf

template <>
struct std::hash<letf::Formula> {
  std::size_t operator()(const letf::Formula& f) const noexcept { return f.hash(); }
};

#endif  // LETF_FORMULA_HPP
