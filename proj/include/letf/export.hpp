// ============================================================================
// letf/export.hpp — text, DOT, CSV and JSON renderings
// ============================================================================

#ifndef LETF_EXPORT_HPP
#define LETF_EXPORT_HPP

#include <span>
#include <string>

#include "letf/countermodel.hpp"
#include "letf/parser.hpp"
#include "letf/semantics.hpp"
#include "letf/tableau.hpp"

namespace letf {

std::string signed_text(const SignedFormula& sf, RenderStyle style = RenderStyle::Ascii);
std::string semantic_atom_text(const SemanticAtom& a, RenderStyle style = RenderStyle::Ascii);

// Numbered-line proof tree.  Node numbers follow creation order; each line
// carries its "Rule k in n" justification, branches are indented below their
// fork point, and a closed branch ends with the closing pair, e.g. "x (2, 4)".
std::string proof_tree_text(const Tableau& t, RenderStyle style = RenderStyle::Ascii);

std::string proof_tree_dot(const Tableau& t, RenderStyle style = RenderStyle::Ascii);

// {"closed": …, "nodes": [{id, sign, formula, rule, source, parent}…],
//  "branches": [{nodes, status, closure}…]}
std::string proof_tree_json(const Tableau& t);

// Rows of formulas, one column per valuation, column labels v1..vn.
std::string matrix_text(const QuasiMatrix& m, RenderStyle style = RenderStyle::Ascii);
std::string matrix_csv(const QuasiMatrix& m);
std::string matrix_json(const QuasiMatrix& m);

// One "v(a) = b" line per domain atom.
std::string valuation_text(const Valuation& v, RenderStyle style = RenderStyle::Ascii);

// The assignment, then one line per premise and for the conclusion.
std::string countermodel_text(const Valuation& v, std::span<const Formula> premises,
                              const Formula& conclusion,
                              RenderStyle style = RenderStyle::Ascii);
std::string countermodel_json(const Valuation& v, std::span<const Formula> premises,
                              const Formula& conclusion);

}  // namespace letf

#endif  // LETF_EXPORT_HPP
