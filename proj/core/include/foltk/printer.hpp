#ifndef FOLTK_PRINTER_HPP
#define FOLTK_PRINTER_HPP

#include <string>

#include "foltk/formula.hpp"

namespace foltk {

// Canonical text with Unicode connectives and minimal parentheses under
// the grammar's precedence; quantifier bodies are always parenthesized so
// the quantified formula stays self-delimiting in any context.
// parse_formula(print_formula(f)) is structurally equal to f.
std::string print_formula(const Formula& f);

}  // namespace foltk

#endif  // FOLTK_PRINTER_HPP
