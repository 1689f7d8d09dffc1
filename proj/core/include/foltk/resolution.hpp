#ifndef FOLTK_RESOLUTION_HPP
#define FOLTK_RESOLUTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foltk/clause.hpp"
#include "foltk/formula.hpp"

namespace foltk {

// Saturation limits. FOL entailment is only semi-decidable, so every query
// carries a budget; the defaults label all bundled fixture stories in well
// under a second.
struct Budget {
  std::size_t max_clauses = 200000;   // clauses retained
  std::size_t max_steps = 1000000;    // resolvents constructed
  std::optional<double> wall_clock_seconds;
};

enum class EntailmentStatus {
  Entailed,   // empty clause derived
  Saturated,  // fixpoint: no new non-subsumed clause derivable
  Exhausted,  // a budget limit was hit first
};

// One retained clause in a saturation run. Input clauses have parents
// (0, 0); ids start at 1 in insertion order.
struct TraceStep {
  std::size_t id = 0;
  std::size_t parent1 = 0;
  std::size_t parent2 = 0;
  Clause clause;
};

struct EntailmentOutcome {
  EntailmentStatus status = EntailmentStatus::Saturated;
  std::size_t clauses_generated = 0;
  std::size_t steps_used = 0;
  // The sub-derivation ending in the empty clause, populated on Entailed
  // when tracing was requested (inputs included, id order).
  std::vector<TraceStep> refutation;
};

std::string print_trace_step(const TraceStep& step);

enum class TruthValue { True, False, Unknown };
enum class Diagnostics { None, Inconsistent, ResourceExhausted };

// Three-valued verdict for a conclusion. value is Unknown whenever
// diagnostics is not None.
struct TruthLabel {
  TruthValue value = TruthValue::Unknown;
  Diagnostics diagnostics = Diagnostics::None;

  bool operator==(const TruthLabel& other) const {
    return value == other.value && diagnostics == other.diagnostics;
  }
};

std::string to_string(TruthValue v);
std::string to_string(Diagnostics d);
std::optional<TruthValue> truth_value_from_string(const std::string& s);

// All binary resolvents of the two clauses over complementary unifiable
// literal pairs, resolving through the factor closures of both parents,
// with factoring applied to each resolvent; tautologies dropped. Clauses
// are renamed apart internally. Deterministic.
std::vector<Clause> resolve(const Clause& c1, const Clause& c2);

// Given-clause saturation with full forward and backward subsumption.
// Selection is smallest clause first, FIFO tie-break, so runs are
// deterministic. Set keep_trace to collect the refutation on Entailed.
EntailmentOutcome saturate(const ClauseSet& cs, const Budget& budget,
                           bool keep_trace = false);

// Refutation check: saturates to_cnf(premises ∧ ¬goal). Entailed means
// premises ⊨ goal. ClauseExplosion surfaces as Exhausted.
EntailmentOutcome entails(std::span<const Formula> premises,
                          const Formula& goal, const Budget& budget,
                          bool keep_trace = false);

// Detail of one labeling query, for reports.
struct LabelDetails {
  TruthLabel label;
  EntailmentOutcome consistency;  // premises alone
  std::optional<EntailmentOutcome> positive;  // premises ⊨ c
  std::optional<EntailmentOutcome> negative;  // premises ⊨ ¬c
};

// Three-valued protocol: an inconsistent premise set yields Unknown with
// Inconsistent (a validator must flag annotation bugs, not mark everything
// True); otherwise True when premises ⊨ conclusion, False when
// premises ⊨ ¬conclusion, Unknown otherwise with ResourceExhausted when a
// direction ran out of budget before saturating.
TruthLabel label_conclusion(std::span<const Formula> premises,
                            const Formula& conclusion, const Budget& budget);

LabelDetails label_conclusion_detailed(std::span<const Formula> premises,
                                       const Formula& conclusion,
                                       const Budget& budget,
                                       bool keep_trace = false);

}  // namespace foltk

#endif  // FOLTK_RESOLUTION_HPP
