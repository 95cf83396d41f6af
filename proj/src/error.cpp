#include "tolerant/error.hpp"

namespace tolerant {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kFieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::kUnsupportedField: return "UNSUPPORTED_FIELD";
    case ErrorCode::kInvalidField: return "INVALID_FIELD";
    case ErrorCode::kZeroScale: return "ZERO_SCALE";
    case ErrorCode::kZeroConstantTerm: return "ZERO_CONSTANT_TERM";
    case ErrorCode::kConstantInput: return "CONSTANT_INPUT";
    case ErrorCode::kZeroInput: return "ZERO_INPUT";
    case ErrorCode::kZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::kDegreeTooSmall: return "DEGREE_TOO_SMALL";
    case ErrorCode::kDuplicateRoots: return "DUPLICATE_ROOTS";
    case ErrorCode::kDegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::kInvalidFactorization: return "INVALID_FACTORIZATION";
    case ErrorCode::kInseparableInSeparableMode: return "INSEPARABLE_IN_SEPARABLE_MODE";
    case ErrorCode::kZeroDiscriminantFactor: return "ZERO_DISCRIMINANT_FACTOR";
    case ErrorCode::kSyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::kFieldLiteralError: return "FIELD_LITERAL_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace tolerant
