#ifndef FOLTK_TERM_HPP
#define FOLTK_TERM_HPP

#include <string>
#include <vector>

namespace foltk {

// First-order term. Variables are names bound by an enclosing quantifier;
// any free identifier is a constant by construction. Function terms only
// arise from Skolemization, never from the surface grammar.
class Term {
 public:
  enum class Kind { Variable, Constant, Function };

  static Term variable(std::string name) {
    return Term(Kind::Variable, std::move(name), {});
  }
  static Term constant(std::string name) {
    return Term(Kind::Constant, std::move(name), {});
  }
  static Term function(std::string name, std::vector<Term> args) {
    return Term(Kind::Function, std::move(name), std::move(args));
  }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  bool is_function() const { return kind_ == Kind::Function; }

  bool operator==(const Term& other) const {
    return kind_ == other.kind_ && name_ == other.name_ &&
           args_ == other.args_;
  }
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    if (name_ != other.name_) return name_ < other.name_;
    return args_ < other.args_;
  }

 private:
  Term(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

// Renders a term the way it appears in formulas: bare identifier, or
// name(arg, ...) for Skolem functions.
std::string print_term(const Term& t);

}  // namespace foltk

#endif  // FOLTK_TERM_HPP
