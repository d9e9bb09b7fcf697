#include "letf/semantics.hpp"

#include <algorithm>

#include "letf/parser.hpp"

namespace letf {

Formula SemanticAtom::as_formula() const {
  switch (kind) {
    case AtomKind::PosLit: return subject;
    case AtomKind::NegLit: return Formula::neg(subject);
    case AtomKind::CircOf: return Formula::circ(subject);
    case AtomKind::NegCircOf: return Formula::neg(Formula::circ(subject));
    case AtomKind::NegBulletOf: return Formula::neg(Formula::bullet(subject));
  }
  return {};
}

bool semantic_atom_less(const SemanticAtom& a, const SemanticAtom& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return render(a.subject) < render(b.subject);
}

namespace {

// The atoms evaluation may consult for f, mirroring evaluate_bits but eager.
void consult(const Formula& f, std::vector<SemanticAtom>& out) {
  switch (f.kind()) {
    case Conn::Atom:
      out.push_back({AtomKind::PosLit, f});
      return;
    case Conn::And:
    case Conn::Or:
      consult(f.lhs(), out);
      consult(f.rhs(), out);
      return;
    case Conn::Circ:
      out.push_back({AtomKind::CircOf, f.child()});
      return;
    case Conn::Bullet:
      out.push_back({AtomKind::CircOf, f.child()});  // •A reads the ∘A bit
      return;
    case Conn::Neg: {
      const Formula& g = f.child();
      switch (g.kind()) {
        case Conn::Atom:
          out.push_back({AtomKind::NegLit, g});
          return;
        case Conn::Neg:
          consult(g.child(), out);
          return;
        case Conn::And:
        case Conn::Or:
          consult(Formula::neg(g.lhs()), out);
          consult(Formula::neg(g.rhs()), out);
          return;
        case Conn::Circ:
          out.push_back({AtomKind::NegCircOf, g.child()});
          return;
        case Conn::Bullet:
          out.push_back({AtomKind::NegBulletOf, g.child()});
          return;
      }
    }
  }
}

}  // namespace

Domain Domain::closure(std::span<const Formula> fs) {
  std::vector<SemanticAtom> found;
  for (const Formula& f : fs) consult(f, found);

  std::unordered_map<SemanticAtom, bool, SemanticAtomHash> seen;  // value: closed?
  for (auto& a : found) seen.emplace(a, false);

  // Whenever ∘A is a domain position, the constraint v(∘A)=1 ⟹ v(A)≠v(¬A)
  // must be checkable, so the atoms of A and ¬A join the domain too.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<SemanticAtom> fresh;
    for (auto& [atom, closed] : seen) {
      if (closed || atom.kind != AtomKind::CircOf) continue;
      closed = true;
      consult(atom.subject, fresh);
      consult(Formula::neg(atom.subject), fresh);
    }
    for (auto& a : fresh)
      if (seen.emplace(a, false).second) changed = true;
  }

  std::vector<SemanticAtom> atoms;
  atoms.reserve(seen.size());
  for (auto& [atom, closed] : seen) atoms.push_back(atom);
  std::sort(atoms.begin(), atoms.end(), semantic_atom_less);
  return from_atoms(std::move(atoms));
}

Domain Domain::from_atoms(std::vector<SemanticAtom> atoms) {
  Domain d;
  d.atoms_ = std::move(atoms);
  d.index_.reserve(d.atoms_.size());
  for (std::size_t i = 0; i < d.atoms_.size(); ++i) d.index_.emplace(d.atoms_[i], i);
  return d;
}

std::optional<std::size_t> Domain::index_of(const SemanticAtom& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<SemanticAtom> semantic_atoms(std::span<const Formula> fs) {
  return Domain::closure(fs).atoms();
}

namespace {

bool atom_bit(const Domain& dom, std::uint64_t bits, const SemanticAtom& a) {
  auto idx = dom.index_of(a);
  if (!idx)
    throw MissingAtomError("formula consults an atom outside the domain: " +
                           render(a.as_formula()));
  return (bits >> *idx) & 1u;
}

bool eval(const Domain& dom, std::uint64_t bits, const Formula& f);

bool eval_neg(const Domain& dom, std::uint64_t bits, const Formula& g) {
  switch (g.kind()) {
    case Conn::Atom:
      return atom_bit(dom, bits, {AtomKind::NegLit, g});
    case Conn::Neg:  // ¬¬A has the value of A
      return eval(dom, bits, g.child());
    case Conn::And:
      return eval_neg(dom, bits, g.lhs()) || eval_neg(dom, bits, g.rhs());
    case Conn::Or:
      return eval_neg(dom, bits, g.lhs()) && eval_neg(dom, bits, g.rhs());
    case Conn::Circ:
      return atom_bit(dom, bits, {AtomKind::NegCircOf, g.child()});
    case Conn::Bullet:
      return atom_bit(dom, bits, {AtomKind::NegBulletOf, g.child()});
  }
  return false;
}

bool eval(const Domain& dom, std::uint64_t bits, const Formula& f) {
  switch (f.kind()) {
    case Conn::Atom:
      return atom_bit(dom, bits, {AtomKind::PosLit, f});
    case Conn::And:
      return eval(dom, bits, f.lhs()) && eval(dom, bits, f.rhs());
    case Conn::Or:
      return eval(dom, bits, f.lhs()) || eval(dom, bits, f.rhs());
    case Conn::Circ:
      return atom_bit(dom, bits, {AtomKind::CircOf, f.child()});
    case Conn::Bullet:
      return !atom_bit(dom, bits, {AtomKind::CircOf, f.child()});
    case Conn::Neg:
      return eval_neg(dom, bits, f.child());
  }
  return false;
}

}  // namespace

bool evaluate_bits(const Domain& dom, std::uint64_t bits, const Formula& f) {
  return eval(dom, bits, f);
}

bool satisfies_circ_constraint(const Domain& dom, std::uint64_t bits) {
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const SemanticAtom& a = dom.at(i);
    if (a.kind != AtomKind::CircOf) continue;
    if (!((bits >> i) & 1u)) continue;
    if (eval(dom, bits, a.subject) == eval_neg(dom, bits, a.subject)) return false;
  }
  return true;
}

bool Valuation::bit(const SemanticAtom& a) const {
  return atom_bit(*dom_, bits_, a);
}

}  // namespace letf
