#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tolerant {

enum class ErrorCode {
  kDivisionByZero,
  kFieldMismatch,
  kUnsupportedField,
  kInvalidField,
  kZeroScale,
  kZeroConstantTerm,
  kConstantInput,
  kZeroInput,
  kZeroPolynomial,
  kDegreeTooSmall,
  kDuplicateRoots,
  kDegreeMismatch,
  kInvalidFactorization,
  kInseparableInSeparableMode,
  kZeroDiscriminantFactor,
  kSyntaxError,
  kFieldLiteralError,
};

// Upper-case wire name, e.g. "DIVISION_BY_ZERO".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  // Byte offset into the parsed text, for parser errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace tolerant
