#ifndef FOLTK_SIGNATURE_HPP
#define FOLTK_SIGNATURE_HPP

#include <functional>
#include <string>

#include "foltk/formula.hpp"

namespace foltk {

// Shape of a formula after anonymization: every predicate becomes P<k>
// (keyed by name and arity, in order of first appearance), every constant
// c<k>, every bound variable v<k> by binder order. Two formulas that differ
// only by a consistent renaming have equal signatures.
struct StructureSignature {
  std::string key;     // canonical print of the anonymized tree
  Formula anonymized;  // the anonymized Formula itself

  bool operator==(const StructureSignature& other) const {
    return key == other.key;
  }
  bool operator!=(const StructureSignature& other) const {
    return key != other.key;
  }
  bool operator<(const StructureSignature& other) const {
    return key < other.key;
  }
};

// Deterministic and stable across runs. Free variables (possible in
// subformulas cut out of a quantified context) anonymize in the same v<k>
// namespace, numbered at first occurrence.
StructureSignature structure_signature(const Formula& f);

}  // namespace foltk

template <>
struct std::hash<foltk::StructureSignature> {
  std::size_t operator()(const foltk::StructureSignature& s) const {
    return std::hash<std::string>()(s.key);
  }
};

#endif  // FOLTK_SIGNATURE_HPP
