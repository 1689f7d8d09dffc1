#ifndef FOLTK_ENGINE_EXPORT_HPP
#define FOLTK_ENGINE_EXPORT_HPP

#include <string>

#include "foltk/formula.hpp"

namespace foltk {

enum class ExportMode { Tell, Ask };

// One-line inference-engine code for a formula:
//
//   TELL$$$Forall('$x1', Implies(Atom('UsedBySomeResearchers', '$x1'),
//   Atom('Popular', '$x1')))
//
// Constructors are Forall/Exists/Not/And/Or/AndList/Implies/Atom. Bound
// variables render as '$x1', '$x2', ... by binder order; constants render
// quoted and lowercased. Conjunction chains of three or more conjuncts
// flatten into AndList([...]). Biconditionals and exclusive-ors are
// expanded first, since the target constructor set has neither.
std::string export_engine_syntax(const Formula& f, ExportMode mode);

}  // namespace foltk

#endif  // FOLTK_ENGINE_EXPORT_HPP
