#ifndef FOLTK_FORMULA_HPP
#define FOLTK_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "foltk/term.hpp"

namespace foltk {

// Immutable FOL sentence. Handles share structure; all operations on
// formulas are pure, so values can be used from any thread.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Iff, Xor, Forall, Exists };

  static Formula atom(std::string predicate, std::vector<Term> args);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula exclusive_or(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // Atom accessors.
  const std::string& predicate() const;
  const std::vector<Term>& terms() const;

  // Connective accessors. child() is the operand of Not; left()/right()
  // are the operands of the binary connectives.
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;

  // Quantifier accessors.
  const std::string& variable() const;
  const Formula& body() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Exact symbol inventory of a formula: predicate name/arity pairs,
// constant names, and bound-variable names.
struct SymbolSet {
  std::set<std::pair<std::string, int>> predicates;
  std::set<std::string> constants;
  std::set<std::string> variables;
};

SymbolSet free_symbols(const Formula& f);

// Rewrites predicate and/or constant names through the given maps; names
// absent from a map are kept. Bound variables are untouched.
Formula rename_symbols(const Formula& f,
                       const std::map<std::string, std::string>& predicates,
                       const std::map<std::string, std::string>& constants);

// Pre-order list of every Formula node (the formula itself first).
std::vector<Formula> subformulas(const Formula& f);

// Counts of each connective/quantifier constructor, keyed by Kind.
std::map<Formula::Kind, std::size_t> connective_counts(const Formula& f);

}  // namespace foltk

#endif  // FOLTK_FORMULA_HPP
