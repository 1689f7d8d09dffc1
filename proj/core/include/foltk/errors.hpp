// Error hierarchy shared across the toolkit.
#ifndef FOLTK_ERRORS_HPP
#define FOLTK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace foltk {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Positioned parse failure. `position` is a byte offset into the input,
// `expected` lists the token spellings that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position,
              std::vector<std::string> expected)
      : Error(what), position(position), expected(std::move(expected)) {}
  std::size_t position;
  std::vector<std::string> expected;
};

class ShadowedVariableError : public Error {
 public:
  ShadowedVariableError(const std::string& variable, std::size_t position)
      : Error("variable '" + variable + "' shadows an enclosing binder"),
        variable(variable),
        position(position) {}
  std::string variable;
  std::size_t position;
};

class ArityMismatchError : public Error {
 public:
  ArityMismatchError(const std::string& predicate, int first, int second)
      : Error("predicate '" + predicate + "' used with arity " +
              std::to_string(first) + " and " + std::to_string(second)),
        predicate(predicate),
        first_arity(first),
        second_arity(second) {}
  std::string predicate;
  int first_arity;
  int second_arity;
};

// CNF distribution exceeded the clause budget.
class ClauseExplosionError : public Error {
 public:
  explicit ClauseExplosionError(std::size_t budget)
      : Error("CNF distribution exceeded the clause budget of " +
              std::to_string(budget)),
        budget(budget) {}
  std::size_t budget;
};

// Corpus loading.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line, std::string field)
      : Error("line " + std::to_string(line) + ", field '" + field +
              "': " + what),
        line(line),
        field(std::move(field)) {}
  std::size_t line;
  std::string field;
};

class FOLParseError : public Error {
 public:
  FOLParseError(const std::string& story_id, const std::string& where,
                std::size_t index, const std::string& detail)
      : Error("story '" + story_id + "', " + where + " " +
              std::to_string(index) + ": " + detail),
        story_id(story_id),
        where(where),
        index(index) {}
  std::string story_id;
  std::string where;  // "premise" or "conclusion"
  std::size_t index;
};

class PairingError : public Error {
 public:
  PairingError(const std::string& story_id, std::size_t nl_count,
               std::size_t fol_count)
      : Error("story '" + story_id + "': " + std::to_string(nl_count) +
              " NL premises but " + std::to_string(fol_count) +
              " FOL premises"),
        story_id(story_id) {}
  std::string story_id;
};

class TooManyPremisesError : public Error {
 public:
  explicit TooManyPremisesError(std::size_t count)
      : Error("minimal-support search is limited to 12 premises, got " +
              std::to_string(count)),
        count(count) {}
  std::size_t count;
};

// Template generation.
class DuplicatePlaceholderError : public Error {
 public:
  explicit DuplicatePlaceholderError(const std::string& name)
      : Error("placeholder '" + name + "' used more than once") {}
};

class GenerationBudgetExceededError : public Error {
 public:
  explicit GenerationBudgetExceededError(std::size_t attempts)
      : Error("no template with all three labels found in " +
              std::to_string(attempts) + " attempts") {}
};

class GeneratorSoundnessError : public Error {
 public:
  explicit GeneratorSoundnessError(const std::string& what) : Error(what) {}
};

class UnboundPlaceholderError : public Error {
 public:
  explicit UnboundPlaceholderError(const std::string& name)
      : Error("placeholder '" + name + "' has no binding") {}
};

class NameCollisionError : public Error {
 public:
  explicit NameCollisionError(const std::string& name)
      : Error("name '" + name + "' collides with the reserved Skolem prefix") {
  }
};

}  // namespace foltk

#endif  // FOLTK_ERRORS_HPP
