#ifndef FOLTK_NORMALIZE_HPP
#define FOLTK_NORMALIZE_HPP

#include <cstddef>
#include <span>

#include "foltk/clause.hpp"
#include "foltk/formula.hpp"

namespace foltk {

// Rewrites →, ↔, ⊕ away:
//   A → B   becomes  ¬A ∨ B
//   A ↔ B   becomes  (¬A ∨ B) ∧ (¬B ∨ A)
//   A ⊕ B   becomes  (A ∨ B) ∧ (¬A ∨ ¬B)
// The result contains only ¬ ∧ ∨ ∀ ∃ and atoms, and is equivalent to f.
Formula eliminate_derived_connectives(const Formula& f);

// Negation normal form. Requires the eliminate output language; pushes ¬
// onto atoms via De Morgan and the quantifier dualities.
Formula to_nnf(const Formula& f);

// Prenex form of an NNF formula: all quantifiers hoisted to the front,
// colliding bound variables renamed (x, x1, x2, ...) first. Hoisting is
// left-to-right, so outer binders stay before inner ones.
Formula to_prenex(const Formula& f);

// Removes every ∃ from a prenex NNF formula, replacing its variable by a
// fresh Skolem constant or a Skolem function of the preceding universals,
// then drops the ∀ prefix (clause variables are implicitly universal).
// Skolem names sk1, sk2, ... skip any name already used in the input.
// The result is equisatisfiable with the input.
Formula skolemize(const Formula& f,
                  std::map<std::string, SkolemOrigin>* registry = nullptr);

// Full pipeline: eliminate, NNF, prenex, Skolemize, distribute ∨ over ∧.
// Tautological clauses and duplicate literals are removed. Throws
// ClauseExplosionError when distribution would exceed max_clauses.
ClauseSet to_cnf(const Formula& f, std::size_t max_clauses = 200000);

// Normalizes each formula independently (smaller Skolem arities than
// prenexing the whole conjunction) with one shared fresh-name scope, and
// unions the clauses. Satisfiability-equivalent to the conjunction.
ClauseSet to_cnf(std::span<const Formula> formulas,
                 std::size_t max_clauses = 200000);

}  // namespace foltk

#endif  // FOLTK_NORMALIZE_HPP
