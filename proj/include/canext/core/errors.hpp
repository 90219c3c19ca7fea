#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace canext {

enum class ErrorKind {
  invalid_document,
  not_a_partial_order,
  redundant_cover,
  not_a_lattice,
  duplicate_element,
  unknown_element,
  unknown_operation,
  cap_exceeded,
  incompatible_congruence,
  not_complete_homomorphism,
  not_a_homomorphism,
  not_surjective,
  not_complete_sublattice,
  not_down_directed,
  no_bracketing_pair,
  untagged_map,
  carrier_mismatch,
  not_boolean,
  not_join_preserving,
  not_distributive,
  not_join_irreducible,
  star_failed,
  symbolic_unsupported_variant,
  symbolic_undecidable,
  outside_fragment,
  fragment_violation,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_document: return "InvalidDocument";
    case ErrorKind::not_a_partial_order: return "NotAPartialOrder";
    case ErrorKind::redundant_cover: return "RedundantCover";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::duplicate_element: return "DuplicateElement";
    case ErrorKind::unknown_element: return "UnknownElement";
    case ErrorKind::unknown_operation: return "UnknownOperation";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::incompatible_congruence: return "IncompatibleCongruence";
    case ErrorKind::not_complete_homomorphism: return "NotCompleteHomomorphism";
    case ErrorKind::not_a_homomorphism: return "NotAHomomorphism";
    case ErrorKind::not_surjective: return "NotSurjective";
    case ErrorKind::not_complete_sublattice: return "NotCompleteSublattice";
    case ErrorKind::not_down_directed: return "NotDownDirected";
    case ErrorKind::no_bracketing_pair: return "NoBracketingPair";
    case ErrorKind::untagged_map: return "UntaggedMap";
    case ErrorKind::carrier_mismatch: return "CarrierMismatch";
    case ErrorKind::not_boolean: return "NotBoolean";
    case ErrorKind::not_join_preserving: return "NotJoinPreserving";
    case ErrorKind::not_distributive: return "NotDistributive";
    case ErrorKind::not_join_irreducible: return "NotJoinIrreducible";
    case ErrorKind::star_failed: return "StarFailed";
    case ErrorKind::symbolic_unsupported_variant: return "SymbolicUnsupportedVariant";
    case ErrorKind::symbolic_undecidable: return "SymbolicUndecidable";
    case ErrorKind::outside_fragment: return "OutsideFragment";
    case ErrorKind::fragment_violation: return "FragmentViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is the stable, machine-readable
/// part; `what()` carries a human diagnostic that names the offending elements.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace canext
