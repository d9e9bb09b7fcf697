// ============================================================================
// letf/semantics.hpp — LET_F valuations and the brute-force entailment oracle
// ============================================================================
//
// A LET_F valuation assigns 0/1 to every formula, subject to:
//
//   v(A ∧ B) = min(v(A), v(B))
//   v(A ∨ B) = max(v(A), v(B))
//   v(¬(A ∧ B)) = max(v(¬A), v(¬B))          (de Morgan through ¬)
//   v(¬(A ∨ B)) = min(v(¬A), v(¬B))
//   v(¬¬A) = v(A)
//   v(∘A) = 1  ⟹  v(A) ≠ v(¬A)              (necessary condition only)
//   v(•A) = 1 − v(∘A)
//
// The value of a formula is not always a function of its parts: p and ¬p are
// independent bits, v(∘A) has no sufficient condition, and ¬∘A / ¬•A are not
// determined by ∘A / •A.  The free positions are the *semantic atoms*:
//
//   PosLit(p), NegLit(p), CircOf(A), NegCircOf(A), NegBulletOf(A)
//
// A Domain is the finite, closure-completed list of semantic atoms consulted
// by a formula set; a Valuation is a bit per domain atom plus the
// compositional evaluator above.  Enumerating every admissible assignment
// over a domain gives the quasi-matrix and with it a brute-force decision
// procedure for entailment, used throughout the tests as the independent
// oracle for the tableau engine.
//
// The enumeration scan is data-parallel across assignments.  Both an OpenMP
// kernel and a plain serial kernel are provided; the serial one is the
// reference the parallel one is tested against (see ExecMode).
//
// ============================================================================

#ifndef LETF_SEMANTICS_HPP
#define LETF_SEMANTICS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "letf/formula.hpp"

namespace letf {

struct CapExceededError : std::runtime_error {
  CapExceededError(std::size_t atoms, std::size_t cap)
      : std::runtime_error("semantic-atom cap exceeded: " + std::to_string(atoms) +
                           " atoms, cap " + std::to_string(cap)),
        atom_count(atoms),
        cap(cap) {}
  std::size_t atom_count;
  std::size_t cap;
};

struct MissingAtomError : std::runtime_error {
  explicit MissingAtomError(const std::string& what) : std::runtime_error(what) {}
};

// ── Semantic atoms ──────────────────────────────────────────────────────────

enum class AtomKind : std::uint8_t { PosLit, NegLit, CircOf, NegCircOf, NegBulletOf };

struct SemanticAtom {
  AtomKind kind;
  Formula subject;  // the bare atom for Pos/NegLit, the operand A otherwise

  // The formula this position marks: p, ¬p, ∘A, ¬∘A or ¬•A.
  Formula as_formula() const;

  bool operator==(const SemanticAtom& o) const noexcept {
    return kind == o.kind && subject == o.subject;
  }
  bool operator!=(const SemanticAtom& o) const noexcept { return !(*this == o); }
  std::size_t hash() const noexcept {
    return subject.hash() * 8 + static_cast<std::size_t>(kind);
  }
};

struct SemanticAtomHash {
  std::size_t operator()(const SemanticAtom& a) const noexcept { return a.hash(); }
};

// Canonical order: constructor rank, then rendered text of the subject.
bool semantic_atom_less(const SemanticAtom& a, const SemanticAtom& b);

// ── Domain ──────────────────────────────────────────────────────────────────

class Domain {
 public:
  // The least consultation-closed atom set of fs: literals and free bits
  // consulted by evaluation, and for every CircOf(A) in the set the atoms
  // of A and ¬A as well (the classicality constraint must be checkable).
  // Atoms come out in canonical order.
  static Domain closure(std::span<const Formula> fs);

  // Explicit atom list, no closure applied.  The caller is responsible for
  // evaluations staying inside it.
  static Domain from_atoms(std::vector<SemanticAtom> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  const SemanticAtom& at(std::size_t i) const { return atoms_[i]; }
  const std::vector<SemanticAtom>& atoms() const noexcept { return atoms_; }
  std::optional<std::size_t> index_of(const SemanticAtom& a) const;
  bool contains(const SemanticAtom& a) const { return index_of(a).has_value(); }

 private:
  std::vector<SemanticAtom> atoms_;
  std::unordered_map<SemanticAtom, std::size_t, SemanticAtomHash> index_;
};

// Convenience: Domain::closure(fs).atoms().
std::vector<SemanticAtom> semantic_atoms(std::span<const Formula> fs);

// ── Evaluation over packed assignment bits ──────────────────────────────────
//
// Bit i of `bits` is the value of domain atom i.  Consultation is lazy:
// conjunction and disjunction short-circuit left to right, so only atoms
// actually consulted must be present (a missing consulted atom throws
// MissingAtomError).

bool evaluate_bits(const Domain& dom, std::uint64_t bits, const Formula& f);

// True iff for every CircOf(A) in the domain with bit 1, A and ¬A evaluate
// differently.  Assignments failing this are not valuations.
bool satisfies_circ_constraint(const Domain& dom, std::uint64_t bits);

// ── Valuation ───────────────────────────────────────────────────────────────

class Valuation {
 public:
  Valuation(std::shared_ptr<const Domain> dom, std::uint64_t bits)
      : dom_(std::move(dom)), bits_(bits) {}

  const Domain& domain() const { return *dom_; }
  std::shared_ptr<const Domain> domain_ptr() const { return dom_; }
  std::uint64_t packed_bits() const noexcept { return bits_; }

  bool bit(std::size_t atom_index) const { return (bits_ >> atom_index) & 1u; }
  bool bit(const SemanticAtom& a) const;  // throws MissingAtomError

  bool evaluate(const Formula& f) const { return evaluate_bits(*dom_, bits_, f); }
  bool is_admissible() const { return satisfies_circ_constraint(*dom_, bits_); }

 private:
  std::shared_ptr<const Domain> dom_;
  std::uint64_t bits_;
};

// ── Enumeration and entailment ──────────────────────────────────────────────

enum class ExecMode : std::uint8_t {
  Auto,      // OpenMP kernel for large scans when available, else serial
  Serial,    // reference kernel
  Parallel,  // OpenMP kernel (falls back to serial without OpenMP)
};

struct EnumOptions {
  std::size_t cap = 24;  // maximum domain size; 2^cap assignments scanned
  ExecMode mode = ExecMode::Auto;
};

// All admissible assignments over the closure domain of fs, in lexicographic
// order of the canonical atom tuple.  Throws CapExceededError when the
// domain outgrows opts.cap.
std::vector<Valuation> enumerate_valuations(std::span<const Formula> fs,
                                            const EnumOptions& opts = {});

struct EntailResult {
  bool valid;
  std::optional<Valuation> counterexample;  // lexicographically first, when invalid
  std::uint64_t valuation_count = 0;        // admissible assignments scanned
};

// Γ ⊨ A iff no admissible assignment makes every premise 1 and the
// conclusion 0.
EntailResult entails(std::span<const Formula> premises, const Formula& conclusion,
                     const EnumOptions& opts = {});

// ── Quasi-matrix ────────────────────────────────────────────────────────────

struct QuasiMatrix {
  std::vector<Formula> rows;
  std::vector<Valuation> columns;                // pairwise distinct, lex order
  std::vector<std::vector<std::uint8_t>> cells;  // cells[row][col]
};

QuasiMatrix quasi_matrix(std::span<const Formula> rows, const EnumOptions& opts = {});

}  // namespace letf

#endif  // LETF_SEMANTICS_HPP
