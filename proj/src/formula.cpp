#include "letf/formula.hpp"

#include <stdexcept>
#include <vector>

namespace letf {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  if (!alpha(name[0])) return false;
  for (char c : name)
    if (!alpha(c) && !(c >= '0' && c <= '9') && c != '_') return false;
  return true;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("atom name must match [a-zA-Z][a-zA-Z0-9_]*: '" + name +
                                "'");
  auto n = std::make_shared<Node>();
  n->kind = Conn::Atom;
  n->name = std::move(name);
  n->hash = combine(static_cast<std::size_t>(Conn::Atom), std::hash<std::string>{}(n->name));
  n->complexity = 0;
  return Formula(std::move(n));
}

Formula Formula::make_unary(Conn kind, Formula a, int step) {
  if (!a.valid()) throw std::invalid_argument("empty operand");
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->complexity = a.complexity() + step;
  std::size_t h = combine(static_cast<std::size_t>(kind), a.hash());
  n->first = std::move(a);
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::make_binary(Conn kind, Formula a, Formula b) {
  if (!a.valid() || !b.valid()) throw std::invalid_argument("empty operand");
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->complexity = a.complexity() + b.complexity() + 1;
  std::size_t h = combine(static_cast<std::size_t>(kind), a.hash());
  h = combine(h, b.hash());
  n->first = std::move(a);
  n->second = std::move(b);
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::neg(Formula a) { return make_unary(Conn::Neg, std::move(a), 1); }
Formula Formula::circ(Formula a) { return make_unary(Conn::Circ, std::move(a), 2); }
Formula Formula::bullet(Formula a) { return make_unary(Conn::Bullet, std::move(a), 3); }
Formula Formula::conj(Formula a, Formula b) { return make_binary(Conn::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make_binary(Conn::Or, std::move(a), std::move(b)); }

bool Formula::operator==(const Formula& o) const noexcept {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash) return false;
  return compare(o) == 0;
}

int Formula::compare(const Formula& o) const noexcept {
  if (node_ == o.node_) return 0;
  if (!node_) return -1;
  if (!o.node_) return 1;
  if (node_->kind != o.node_->kind)
    return node_->kind < o.node_->kind ? -1 : 1;
  switch (node_->kind) {
    case Conn::Atom:
      return node_->name.compare(o.node_->name) < 0   ? -1
             : node_->name.compare(o.node_->name) > 0 ? 1
                                                      : 0;
    case Conn::Neg:
    case Conn::Circ:
    case Conn::Bullet:
      return node_->first.compare(o.node_->first);
    case Conn::And:
    case Conn::Or: {
      int c = node_->first.compare(o.node_->first);
      if (c != 0) return c;
      return node_->second.compare(o.node_->second);
    }
  }
  return 0;
}

std::set<Formula> generalized_subformulas(const Formula& f) {
  // Direct generators of one formula: its immediate subformulas, plus the
  // de Morgan negations under ¬(·∧·)/¬(·∨·), ¬A under ∘A, and ∘A under •A.
  auto direct = [](const Formula& g, std::vector<Formula>& out) {
    switch (g.kind()) {
      case Conn::Atom:
        break;
      case Conn::Neg: {
        const Formula& body = g.child();
        out.push_back(body);
        if (body.kind() == Conn::And || body.kind() == Conn::Or) {
          out.push_back(Formula::neg(body.lhs()));
          out.push_back(Formula::neg(body.rhs()));
        }
        break;
      }
      case Conn::And:
      case Conn::Or:
        out.push_back(g.lhs());
        out.push_back(g.rhs());
        break;
      case Conn::Circ:
        out.push_back(g.child());
        out.push_back(Formula::neg(g.child()));
        break;
      case Conn::Bullet:
        out.push_back(g.child());
        out.push_back(Formula::circ(g.child()));
        break;
    }
  };

  std::set<Formula> result;
  std::vector<Formula> work;
  direct(f, work);
  while (!work.empty()) {
    Formula g = std::move(work.back());
    work.pop_back();
    if (!result.insert(g).second) continue;
    direct(g, work);
  }
  result.erase(f);  // proper: the formula itself is excluded
  return result;
}

}  // namespace letf
