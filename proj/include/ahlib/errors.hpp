#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ahlib {

enum class ErrorCode {
  DivisionByZero,
  MixedContexts,
  NotPrime,
  NotIrreducible,
  CharacteristicZero,
  CharacteristicPositive,
  ParseError,
  ConstantPolynomial,
  FactorizationOutOfScope,
  DivisibilityViolated,
  CenterIdentityViolated,
  ZeroElement,
  LambdaNotRootOfH,
  HVanishesAtLambda,
  FNotFactorOfH,
  GNotPrime,
  NotAWeylModule,
  NotDeltaInvariant,
  FDividesH,
  MissingPart,
  SizeGuard,
  FieldTooLarge,
  RelationViolated,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedContexts: return "MixedContexts";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::CharacteristicZero: return "CharacteristicZero";
    case ErrorCode::CharacteristicPositive: return "CharacteristicPositive";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::FactorizationOutOfScope: return "FactorizationOutOfScope";
    case ErrorCode::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorCode::CenterIdentityViolated: return "CenterIdentityViolated";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::LambdaNotRootOfH: return "LambdaNotRootOfH";
    case ErrorCode::HVanishesAtLambda: return "HVanishesAtLambda";
    case ErrorCode::FNotFactorOfH: return "FNotFactorOfH";
    case ErrorCode::GNotPrime: return "GNotPrime";
    case ErrorCode::NotAWeylModule: return "NotAWeylModule";
    case ErrorCode::NotDeltaInvariant: return "NotDeltaInvariant";
    case ErrorCode::FDividesH: return "FDividesH";
    case ErrorCode::MissingPart: return "MissingPart";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ahlib
