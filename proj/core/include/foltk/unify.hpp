#ifndef FOLTK_UNIFY_HPP
#define FOLTK_UNIFY_HPP

#include <map>
#include <optional>
#include <string>

#include "foltk/clause.hpp"
#include "foltk/term.hpp"

namespace foltk {

// Idempotent variable bindings; no binding maps a variable to a term
// containing that variable (occurs check enforced by unify).
using Substitution = std::map<std::string, Term>;

Term apply(const Substitution& s, const Term& t);
Literal apply(const Substitution& s, const Literal& lit);
Clause apply(const Substitution& s, const Clause& c);

// Most general unifier, or nullopt when none exists. Callers resolving
// clauses must rename them apart first.
std::optional<Substitution> unify(const Term& a, const Term& b);

// Unifies the atoms; polarity is the caller's business.
std::optional<Substitution> unify(const Literal& a, const Literal& b);

}  // namespace foltk

#endif  // FOLTK_UNIFY_HPP
