#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpdrep {

enum class ErrorKind {
  NotComposable,
  MalformedTable,
  DimensionMismatch,
  NotInvertible,
  InvalidBisection,
  NotSemilinear,
  InvalidRep,
  NotEnoughBisections,
  NotLocal,
  NotHomomorphism,
  ChoiceDependent,
  NotConstantOnFibers,
  AgreementFailure,
  NotEquivariant,
  TooLarge,
  SyntaxError,
  SemanticError,
  UnknownElement,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-checkable kind. Every failure mode of the
/// library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpdrep
