#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pries {

enum class ErrorCode {
  // order-core
  NotSquare,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  BadLabels,
  NotMonotone,
  // frames
  EmptyCarrier,
  NotALattice,
  NotDistributive,
  BadTable,
  NotJoinPreserving,
  AdjointMismatch,
  AdjointAbsent,
  // duality
  NotAHom,
  RoundTripFailure,
  EquationViolation,
  SizeRefused,
  // sublocales
  NotANucleus,
  NotASublocale,
  NotLocalic,
  IdentityViolation,
  // jt / subfit
  EquivalenceViolation,
  PreconditionFailed,
  // omega
  NotRepresentable,
  RemarkViolation,
  // io
  BadInput,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `witness` carries the
/// element indices that exhibit the failure, in the order the error names
/// them (e.g. NotTransitive -> {i, j, k}).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

/// Outcome of a property check: holds, or fails with the first witness found.
struct Check {
  bool holds = true;
  std::vector<std::size_t> witness;

  static Check pass() { return {}; }
  static Check fail(std::vector<std::size_t> w) { return {false, std::move(w)}; }

  explicit operator bool() const { return holds; }
};

}  // namespace pries
