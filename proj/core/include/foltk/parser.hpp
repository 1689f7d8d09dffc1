#ifndef FOLTK_PARSER_HPP
#define FOLTK_PARSER_HPP

#include <string>
#include <string_view>

#include "foltk/errors.hpp"
#include "foltk/formula.hpp"

namespace foltk {

// Surface grammar (both spellings accepted everywhere):
//
//   formula = iff
//   iff     = imp { ("↔"|"<->") imp }            left-associative
//   imp     = xor [ ("→"|"->") imp ]             right-associative
//   xor     = disj { ("⊕"|"^") disj }            left-associative
//   disj    = conj { ("∨"|"|") conj }
//   conj    = unary { ("∧"|"&") unary }
//   unary   = ("¬"|"-") unary | quant | atom | "(" formula ")"
//   quant   = ("∀"|"forall"|"∃"|"exists") var { var } body
//   atom    = PredName "(" term { "," term } ")"
//
// A quantifier body is the parenthesized formula immediately following the
// variables when one is present, otherwise the maximal suffix. Capitalized
// identifiers are predicates; a lowercase identifier bound by an enclosing
// quantifier is a variable; any other identifier in term position is a
// constant. Identifiers may contain digits, underscores, and interior
// hyphens (gpt-3), where a hyphen is part of the identifier only when
// followed by an alphanumeric character.
struct ParseOptions {
  // When set, reusing a predicate with a different arity inside one parse
  // unit raises ArityMismatchError. Lenient mode accepts it, so metric
  // scoring never aborts on malformed candidate output.
  bool strict_arity = false;
};

// Throws SyntaxError, ShadowedVariableError, or ArityMismatchError.
// Never crashes on arbitrary byte input.
Formula parse_formula(std::string_view text, const ParseOptions& options = {});

}  // namespace foltk

#endif  // FOLTK_PARSER_HPP
