#ifndef FOLTK_CLAUSE_HPP
#define FOLTK_CLAUSE_HPP

#include <map>
#include <string>
#include <vector>

#include "foltk/term.hpp"

namespace foltk {

// A possibly negated predicate application. Variables occurring in a
// clause are implicitly universally quantified.
struct Literal {
  bool positive = true;
  std::string predicate;
  std::vector<Term> args;

  Literal complemented() const { return {!positive, predicate, args}; }

  bool same_atom(const Literal& other) const {
    return predicate == other.predicate && args == other.args;
  }
  bool operator==(const Literal& other) const {
    return positive == other.positive && same_atom(other);
  }
  bool operator<(const Literal& other) const {
    if (predicate != other.predicate) return predicate < other.predicate;
    if (positive != other.positive) return positive < other.positive;
    return args < other.args;
  }
};

// Duplicate-free disjunction of literals, kept sorted (set semantics).
// The empty clause is the contradiction.
struct Clause {
  std::vector<Literal> literals;

  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }
  bool operator==(const Clause& other) const {
    return literals == other.literals;
  }
  bool operator<(const Clause& other) const {
    return literals < other.literals;
  }

  // L and ¬L over the identical atom.
  bool is_tautology() const;
};

// Where a Skolem symbol came from: the quantified variable it replaced and
// its position in the prenex prefix of the originating formula.
struct SkolemOrigin {
  std::string variable;
  int prefix_position = 0;
};

struct ClauseSet {
  std::vector<Clause> clauses;
  std::map<std::string, SkolemOrigin> skolem_registry;
};

std::string print_literal(const Literal& lit);

// Diagnostic dump form "{L1, L2, ...}"; the empty clause prints "{}".
std::string print_clause(const Clause& c);

// Sorts literals, removes duplicates, and renames variables to v0, v1, ...
// in order of first occurrence so structurally equal clauses compare equal.
Clause canonicalize(const Clause& c);

}  // namespace foltk

#endif  // FOLTK_CLAUSE_HPP
