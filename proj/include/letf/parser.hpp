// ============================================================================
// letf/parser.hpp — concrete syntax: parsing and printing
// ============================================================================
//
// Surface grammar (whitespace insensitive):
//
//   formula := imp
//   imp     := disj ("->" imp)?                      -- right associative
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := ("~"|"¬"|"@"|"∘"|"#"|"•"|"sim"|"approx") unary
//            | "bot(" ident ")" | atom | "(" formula ")"
//   atom    := [a-zA-Z][a-zA-Z0-9_]*
//
// ASCII operators ~ & | @ # and the Unicode aliases ¬ ∧ ∨ ∘ • are
// interchangeable on input.  Sugar is eliminated while parsing, so the AST
// only ever contains the six core constructors:
//
//   A -> B     becomes  ~A | B
//   sim A      becomes  @A & ~A        (supplementing quasi-negation)
//   approx A   becomes  #A | ~A        (complementing quasi-negation)
//   bot(p)     becomes  p & ~p & @p    (bottom particle for the atom p)
//
// ============================================================================

#ifndef LETF_PARSER_HPP
#define LETF_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "letf/formula.hpp"

namespace letf {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;  // byte offset into the input
};

Formula parse(std::string_view text);

// Comma-separated formulas; an empty or all-whitespace string yields {}.
// Commas never occur inside a formula, so no nesting rules are needed.
std::vector<Formula> parse_formula_list(std::string_view text);

enum class RenderStyle : std::uint8_t { Ascii, Unicode };

// Minimal parenthesization: parse(render(f, s)) == f for both styles.
std::string render(const Formula& f, RenderStyle style = RenderStyle::Ascii);

}  // namespace letf

#endif  // LETF_PARSER_HPP
