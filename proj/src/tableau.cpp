#include "letf/tableau.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "letf/countermodel.hpp"

namespace letf {

bool is_branching(RuleId r) noexcept {
  switch (r) {
    case RuleId::R2:
    case RuleId::R3:
    case RuleId::R5:
    case RuleId::R8:
    case RuleId::R11:
      return true;
    default:
      return false;
  }
}

std::optional<RuleId> applicable_rule(const SignedFormula& sf) noexcept {
  const Formula& f = sf.formula;
  const bool pos = sf.sign == Sign::One;
  switch (f.kind()) {
    case Conn::Atom:
      return std::nullopt;
    case Conn::And:
      return pos ? RuleId::R1 : RuleId::R2;
    case Conn::Or:
      return pos ? RuleId::R5 : RuleId::R6;
    case Conn::Circ:
      // 0(∘A) is terminal: a rule for it would just loop with R12, and any
      // closure it could produce is reachable through R13 instead.
      return pos ? std::optional<RuleId>(RuleId::R11) : std::nullopt;
    case Conn::Bullet:
      return pos ? RuleId::R12 : RuleId::R13;
    case Conn::Neg: {
      const Formula& g = f.child();
      switch (g.kind()) {
        case Conn::Atom:
          return std::nullopt;  // literal
        case Conn::And:
          return pos ? RuleId::R3 : RuleId::R4;
        case Conn::Or:
          return pos ? RuleId::R7 : RuleId::R8;
        case Conn::Neg:
          return pos ? RuleId::R9 : RuleId::R10;
        case Conn::Circ:
        case Conn::Bullet:
          // ¬∘A and ¬•A are not determined by ∘A/•A; both signs terminal.
          return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<SignedFormula>> apply_rule(RuleId rule, const SignedFormula& sf) {
  auto expected = applicable_rule(sf);
  if (!expected || *expected != rule)
    throw std::invalid_argument("rule does not apply to this signed formula");
  const Formula& f = sf.formula;
  auto nf = [](const Formula& x) { return Formula::neg(x); };
  switch (rule) {
    case RuleId::R1:
      return {{one(f.lhs()), one(f.rhs())}};
    case RuleId::R2:
      return {{zero(f.lhs())}, {zero(f.rhs())}};
    case RuleId::R3: {
      const Formula& g = f.child();
      return {{one(nf(g.lhs()))}, {one(nf(g.rhs()))}};
    }
    case RuleId::R4: {
      const Formula& g = f.child();
      return {{zero(nf(g.lhs())), zero(nf(g.rhs()))}};
    }
    case RuleId::R5:
      return {{one(f.lhs())}, {one(f.rhs())}};
    case RuleId::R6:
      return {{zero(f.lhs()), zero(f.rhs())}};
    case RuleId::R7: {
      const Formula& g = f.child();
      return {{one(nf(g.lhs())), one(nf(g.rhs()))}};
    }
    case RuleId::R8: {
      const Formula& g = f.child();
      return {{zero(nf(g.lhs()))}, {zero(nf(g.rhs()))}};
    }
    case RuleId::R9:
      return {{one(f.child().child())}};
    case RuleId::R10:
      return {{zero(f.child().child())}};
    case RuleId::R11:
      return {{one(f.child()), zero(nf(f.child()))},
              {zero(f.child()), one(nf(f.child()))}};
    case RuleId::R12:
      return {{zero(Formula::circ(f.child()))}};
    case RuleId::R13:
      return {{one(Formula::circ(f.child()))}};
  }
  throw std::logic_error("unknown rule");
}

bool has_closing_pair(std::span<const SignedFormula> sfs) {
  std::unordered_set<SignedFormula, SignedFormulaHash> seen;
  seen.reserve(sfs.size());
  for (const SignedFormula& sf : sfs) {
    if (seen.count({opposite(sf.sign), sf.formula})) return true;
    seen.insert(sf);
  }
  return false;
}

std::vector<SignedFormula> Tableau::branch_formulas(const Branch& b) const {
  std::vector<SignedFormula> out;
  out.reserve(b.nodes.size());
  for (int id : b.nodes) out.push_back(nodes_[static_cast<std::size_t>(id)].sf);
  return out;
}

// ── Expansion engine ────────────────────────────────────────────────────────

class Expander {
 public:
  explicit Expander(const ExpandOptions& opts) : opts_(opts), rng_(opts.seed) {}

  Tableau run(std::span<const SignedFormula> initial) {
    WorkBranch root;
    // The first node set: every signed formula of the input, in order,
    // duplicates suppressed.  The branch may already close here.
    for (const SignedFormula& sf : initial) insert(root, sf, -1, std::nullopt, true);
    t_.initial_count_ = t_.nodes_.size();

    std::vector<WorkBranch> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
      WorkBranch b = std::move(stack.back());
      stack.pop_back();
      for (;;) {
        if (b.closure) {
          finish(std::move(b), BranchStatus::Closed);
          break;
        }
        int pick = select(b);
        if (pick < 0) {  // terminated open branch
          finish(std::move(b), BranchStatus::Open);
          break;
        }
        std::erase(b.pending, pick);
        b.expanded.push_back(pick);
        const SignedFormula picked = t_.nodes_[static_cast<std::size_t>(pick)].sf;
        RuleId rule = *applicable_rule(picked);
        auto extensions = apply_rule(rule, picked);
        if (extensions.size() == 1) {
          append(b, extensions[0], pick, rule);
        } else {
          WorkBranch right = b;  // fork before the left side mutates
          append(b, extensions[0], pick, rule);
          append(right, extensions[1], pick, rule);
          stack.push_back(std::move(right));
        }
      }
    }

    t_.closed_ = std::all_of(t_.branches_.begin(), t_.branches_.end(),
                             [](const Branch& b) { return b.is_closed(); });
    return std::move(t_);
  }

 private:
  struct WorkBranch {
    std::vector<int> path;
    std::unordered_map<SignedFormula, int, SignedFormulaHash> members;
    std::vector<int> pending;  // node ids with a rule left to fire, in insertion order
    std::vector<int> expanded;
    std::optional<std::pair<int, int>> closure;
  };

  void insert(WorkBranch& b, const SignedFormula& sf, int source,
              std::optional<RuleId> rule, bool force = false) {
    if (b.closure && !force) return;
    if (b.members.count(sf)) return;  // duplicate suppression per branch
    const int parent = b.path.empty() ? -1 : b.path.back();
    const int id = static_cast<int>(t_.nodes_.size());
    TableauNode node;
    node.sf = sf;
    node.parent = parent;
    node.source = source;
    node.rule = rule;
    t_.nodes_.push_back(std::move(node));
    if (parent >= 0) t_.nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
    b.path.push_back(id);
    b.members.emplace(sf, id);

    if (!b.closure) {
      auto opp = b.members.find({opposite(sf.sign), sf.formula});
      if (opp != b.members.end()) {
        b.closure = std::make_pair(std::min(opp->second, id), std::max(opp->second, id));
        return;
      }
    }
    if (applicable_rule(sf)) b.pending.push_back(id);
  }

  void append(WorkBranch& b, const std::vector<SignedFormula>& ext, int source,
              RuleId rule) {
    for (const SignedFormula& sf : ext) insert(b, sf, source, rule);
  }

  int select(WorkBranch& b) {
    if (b.pending.empty()) return -1;
    if (opts_.strategy == Strategy::RandomFair)
      return b.pending[rng_() % b.pending.size()];
    for (int id : b.pending)
      if (!is_branching(*applicable_rule(t_.nodes_[static_cast<std::size_t>(id)].sf)))
        return id;
    return b.pending.front();
  }

  void finish(WorkBranch&& b, BranchStatus status) {
    Branch out;
    out.nodes = std::move(b.path);
    out.expanded = std::move(b.expanded);
    out.status = status;
    out.closure = b.closure;
    t_.branches_.push_back(std::move(out));
  }

  ExpandOptions opts_;
  std::mt19937_64 rng_;
  Tableau t_;
};

Tableau expand(std::span<const SignedFormula> initial, const ExpandOptions& opts) {
  return Expander(opts).run(initial);
}

// ── Decision procedures ─────────────────────────────────────────────────────

ProofResult prove(std::span<const Formula> premises, const Formula& conclusion,
                  const ExpandOptions& opts) {
  std::vector<SignedFormula> initial;
  initial.reserve(premises.size() + 1);
  for (const Formula& p : premises) initial.push_back(one(p));
  initial.push_back(zero(conclusion));

  ProofResult r{Verdict::NotProvable, expand(initial, opts), {}};
  if (r.tableau.closed()) {
    r.verdict = Verdict::Provable;
  } else {
    for (std::size_t i = 0; i < r.tableau.branches().size(); ++i)
      if (!r.tableau.branches()[i].is_closed())
        r.open_branches.push_back(static_cast<int>(i));
  }
  return r;
}

SatResult check_sat(std::span<const Formula> fs, const ExpandOptions& opts) {
  std::vector<SignedFormula> initial;
  initial.reserve(fs.size());
  for (const Formula& f : fs) initial.push_back(one(f));

  SatResult r{false, expand(initial, opts), std::nullopt, std::nullopt};
  if (r.tableau.closed()) return r;

  r.satisfiable = true;
  for (std::size_t i = 0; i < r.tableau.branches().size(); ++i) {
    if (r.tableau.branches()[i].is_closed()) continue;
    r.witness_branch = static_cast<int>(i);
    r.witness = induced_valuation(
        extract_semi_valuation(r.tableau, r.tableau.branches()[i]));
    break;
  }
  return r;
}

std::vector<Formula> prune(const ProofResult& result, std::span<const Formula> premises) {
  if (!result.provable())
    throw std::invalid_argument("prune requires a provable result");
  const Tableau& t = result.tableau;

  // Recover the conclusion: the 0-signed formula of the root set.
  std::optional<Formula> conclusion;
  for (std::size_t i = 0; i < t.initial_count(); ++i)
    if (t.nodes()[i].sf.sign == Sign::Zero) conclusion = t.nodes()[i].sf.formula;
  if (!conclusion)
    throw std::invalid_argument("tableau has no 0-signed root formula");

  std::unordered_set<int> used_roots;
  for (const Branch& b : t.branches()) {
    for (int id : b.expanded)
      if (id < static_cast<int>(t.initial_count())) used_roots.insert(id);
    if (b.closure) {
      if (b.closure->first < static_cast<int>(t.initial_count()))
        used_roots.insert(b.closure->first);
      if (b.closure->second < static_cast<int>(t.initial_count()))
        used_roots.insert(b.closure->second);
    }
  }

  std::unordered_map<SignedFormula, int, SignedFormulaHash> root_ids;
  for (std::size_t i = 0; i < t.initial_count(); ++i)
    root_ids.emplace(t.nodes()[i].sf, static_cast<int>(i));

  std::vector<Formula> kept;
  std::set<Formula> seen;
  for (const Formula& p : premises) {
    auto it = root_ids.find(one(p));
    if (it == root_ids.end() || !used_roots.count(it->second)) continue;
    if (seen.insert(p).second) kept.push_back(p);
  }

  // The pruned set must still prove the conclusion; anything else is an
  // engine defect, not a caller error.
  if (!prove(kept, *conclusion).provable())
    throw std::logic_error("pruned premise set no longer proves the conclusion");
  return kept;
}

bool check_analyticity(const Tableau& t) {
  std::set<Formula> allowed;
  for (std::size_t i = 0; i < t.initial_count(); ++i) {
    const Formula& f = t.nodes()[i].sf.formula;
    allowed.insert(f);
    auto subs = generalized_subformulas(f);
    allowed.insert(subs.begin(), subs.end());
  }
  for (std::size_t i = t.initial_count(); i < t.nodes().size(); ++i)
    if (!allowed.count(t.nodes()[i].sf.formula)) return false;
  return true;
}

}  // namespace letf
