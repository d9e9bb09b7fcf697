// Assignment-space scan kernels behind enumerate_valuations / entails /
// quasi_matrix.  The scan is embarrassingly parallel: each ordinal in
// [0, 2^n) is an independent candidate assignment.  scan_serial is the
// reference implementation; scan_parallel is the OpenMP kernel.  The two
// must agree bit for bit (tests compare them; tools/enum_bench.cpp times
// them against each other).
//
// Formulas are compiled once per scan into flat index-addressed programs;
// the per-assignment work then touches no shared state (no hashing, no
// reference counts), which is what lets the parallel kernel scale.

#include <algorithm>
#include <cstdint>
#include <memory>

#include "letf/semantics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace letf {

namespace {

constexpr std::size_t kHardCap = 62;               // scan counter is a 64-bit ordinal
constexpr std::uint64_t kAutoParallel = 1u << 10;  // below this, threads cost more

// Lexicographic enumeration: atom 0 is the most significant position of the
// ordinal, while packed evaluation bits index atoms from bit 0 up.
std::uint64_t ordinal_to_bits(std::uint64_t ordinal, std::size_t n) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i)
    if ((ordinal >> (n - 1 - i)) & 1u) bits |= 1ull << i;
  return bits;
}

// A formula flattened over a fixed domain: leaves read an assignment bit by
// index, inner ops short-circuit left to right exactly like evaluate_bits.
class CompiledFormula {
 public:
  CompiledFormula(const Domain& dom, const Formula& f) { root_ = compile(dom, f); }

  bool eval(std::uint64_t bits) const { return eval_at(root_, bits); }

 private:
  enum class Code : std::uint8_t { Bit, NotBit, And, Or };
  struct Op {
    Code code;
    std::int32_t a;  // bit index for leaves, left child otherwise
    std::int32_t b;  // right child
  };

  std::int32_t leaf(Code code, const Domain& dom, const SemanticAtom& atom) {
    auto idx = dom.index_of(atom);
    if (!idx) throw MissingAtomError("scan domain is not closed");
    ops_.push_back({code, static_cast<std::int32_t>(*idx), -1});
    return static_cast<std::int32_t>(ops_.size() - 1);
  }

  std::int32_t node(Code code, std::int32_t a, std::int32_t b) {
    ops_.push_back({code, a, b});
    return static_cast<std::int32_t>(ops_.size() - 1);
  }

  std::int32_t compile(const Domain& dom, const Formula& f) {
    switch (f.kind()) {
      case Conn::Atom:
        return leaf(Code::Bit, dom, {AtomKind::PosLit, f});
      case Conn::And:
        return node(Code::And, compile(dom, f.lhs()), compile(dom, f.rhs()));
      case Conn::Or:
        return node(Code::Or, compile(dom, f.lhs()), compile(dom, f.rhs()));
      case Conn::Circ:
        return leaf(Code::Bit, dom, {AtomKind::CircOf, f.child()});
      case Conn::Bullet:
        return leaf(Code::NotBit, dom, {AtomKind::CircOf, f.child()});
      case Conn::Neg:
        return compile_neg(dom, f.child());
    }
    throw std::logic_error("unknown connective");
  }

  std::int32_t compile_neg(const Domain& dom, const Formula& g) {
    switch (g.kind()) {
      case Conn::Atom:
        return leaf(Code::Bit, dom, {AtomKind::NegLit, g});
      case Conn::Neg:  // ¬¬A has the value of A
        return compile(dom, g.child());
      case Conn::And:
        return node(Code::Or, compile_neg(dom, g.lhs()), compile_neg(dom, g.rhs()));
      case Conn::Or:
        return node(Code::And, compile_neg(dom, g.lhs()), compile_neg(dom, g.rhs()));
      case Conn::Circ:
        return leaf(Code::Bit, dom, {AtomKind::NegCircOf, g.child()});
      case Conn::Bullet:
        return leaf(Code::Bit, dom, {AtomKind::NegBulletOf, g.child()});
    }
    throw std::logic_error("unknown connective");
  }

  bool eval_at(std::int32_t i, std::uint64_t bits) const {
    const Op& op = ops_[static_cast<std::size_t>(i)];
    switch (op.code) {
      case Code::Bit:
        return (bits >> op.a) & 1u;
      case Code::NotBit:
        return !((bits >> op.a) & 1u);
      case Code::And:
        return eval_at(op.a, bits) && eval_at(op.b, bits);
      case Code::Or:
        return eval_at(op.a, bits) || eval_at(op.b, bits);
    }
    return false;
  }

  std::vector<Op> ops_;
  std::int32_t root_ = -1;
};

// The admissibility filter: for every CircOf(A) position with bit 1, A and
// ¬A must evaluate differently.
struct CircCheck {
  std::size_t bit_index;
  CompiledFormula pos;
  CompiledFormula neg;
};

struct ScanProgram {
  std::vector<CircCheck> circ_checks;
  std::vector<CompiledFormula> premises;
  std::optional<CompiledFormula> conclusion;
  bool collect = false;
  std::size_t atom_count = 0;

  static ScanProgram build(const Domain& dom, std::span<const Formula> premises,
                           const Formula* conclusion, bool collect) {
    ScanProgram p;
    p.atom_count = dom.size();
    p.collect = collect;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const SemanticAtom& a = dom.at(i);
      if (a.kind != AtomKind::CircOf) continue;
      p.circ_checks.push_back({i, CompiledFormula(dom, a.subject),
                               CompiledFormula(dom, Formula::neg(a.subject))});
    }
    for (const Formula& f : premises) p.premises.emplace_back(dom, f);
    if (conclusion) p.conclusion.emplace(dom, *conclusion);
    return p;
  }

  bool admissible(std::uint64_t bits) const {
    for (const CircCheck& c : circ_checks) {
      if (!((bits >> c.bit_index) & 1u)) continue;
      if (c.pos.eval(bits) == c.neg.eval(bits)) return false;
    }
    return true;
  }

  bool counterexample(std::uint64_t bits) const {
    for (const CompiledFormula& f : premises)
      if (!f.eval(bits)) return false;
    return !conclusion->eval(bits);
  }
};

struct ScanResult {
  std::vector<std::uint8_t> keep;  // per ordinal, only if collect
  std::uint64_t admissible = 0;
  std::int64_t first_counterexample = -1;  // ordinal, lexicographically first
};

ScanResult scan_serial(const ScanProgram& prog) {
  const std::size_t n = prog.atom_count;
  const std::uint64_t total = 1ull << n;
  ScanResult out;
  if (prog.collect) out.keep.assign(total, 0);
  for (std::uint64_t ord = 0; ord < total; ++ord) {
    const std::uint64_t bits = ordinal_to_bits(ord, n);
    if (!prog.admissible(bits)) continue;
    ++out.admissible;
    if (prog.collect) out.keep[ord] = 1;
    if (prog.conclusion && out.first_counterexample < 0 && prog.counterexample(bits))
      out.first_counterexample = static_cast<std::int64_t>(ord);
  }
  return out;
}

ScanResult scan_parallel(const ScanProgram& prog) {
#ifdef _OPENMP
  const std::size_t n = prog.atom_count;
  const long long total = 1ll << n;
  ScanResult out;
  if (prog.collect) out.keep.assign(static_cast<std::size_t>(total), 0);
  unsigned long long admissible = 0;
  long long best = total;  // sentinel: no counterexample found
#pragma omp parallel for schedule(static) reduction(+ : admissible) reduction(min : best)
  for (long long ord = 0; ord < total; ++ord) {
    const std::uint64_t bits = ordinal_to_bits(static_cast<std::uint64_t>(ord), n);
    if (!prog.admissible(bits)) continue;
    ++admissible;
    if (prog.collect) out.keep[static_cast<std::size_t>(ord)] = 1;
    if (prog.conclusion && ord < best && prog.counterexample(bits)) best = ord;
  }
  out.admissible = admissible;
  out.first_counterexample = best < total ? best : -1;
  return out;
#else
  return scan_serial(prog);
#endif
}

ScanResult scan(const ScanProgram& prog, ExecMode mode) {
  switch (mode) {
    case ExecMode::Serial:
      return scan_serial(prog);
    case ExecMode::Parallel:
      return scan_parallel(prog);
    case ExecMode::Auto:
      break;
  }
#ifdef _OPENMP
  if ((1ull << prog.atom_count) >= kAutoParallel) return scan_parallel(prog);
#endif
  return scan_serial(prog);
}

std::shared_ptr<const Domain> closed_domain(std::span<const Formula> fs,
                                            const EnumOptions& opts) {
  auto dom = std::make_shared<Domain>(Domain::closure(fs));
  const std::size_t cap = std::min(opts.cap, kHardCap);
  if (dom->size() > cap) throw CapExceededError(dom->size(), cap);
  return dom;
}

}  // namespace

std::vector<Valuation> enumerate_valuations(std::span<const Formula> fs,
                                            const EnumOptions& opts) {
  auto dom = closed_domain(fs, opts);
  ScanResult r = scan(ScanProgram::build(*dom, {}, nullptr, true), opts.mode);

  std::vector<Valuation> out;
  out.reserve(r.admissible);
  for (std::uint64_t ord = 0; ord < r.keep.size(); ++ord)
    if (r.keep[ord]) out.emplace_back(dom, ordinal_to_bits(ord, dom->size()));
  return out;
}

EntailResult entails(std::span<const Formula> premises, const Formula& conclusion,
                     const EnumOptions& opts) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(conclusion);
  auto dom = closed_domain(all, opts);

  ScanResult r = scan(ScanProgram::build(*dom, premises, &conclusion, false), opts.mode);

  EntailResult out;
  out.valuation_count = r.admissible;
  out.valid = r.first_counterexample < 0;
  if (!out.valid)
    out.counterexample = Valuation(
        dom, ordinal_to_bits(static_cast<std::uint64_t>(r.first_counterexample),
                             dom->size()));
  return out;
}

QuasiMatrix quasi_matrix(std::span<const Formula> rows, const EnumOptions& opts) {
  QuasiMatrix m;
  m.rows.assign(rows.begin(), rows.end());
  m.columns = enumerate_valuations(rows, opts);
  m.cells.resize(m.rows.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    m.cells[r].resize(m.columns.size());
    for (std::size_t c = 0; c < m.columns.size(); ++c)
      m.cells[r][c] = m.columns[c].evaluate(m.rows[r]) ? 1 : 0;
  }
  return m;
}

}  // namespace letf
