#pragma once

// Exact coefficient fields: Q, F_p and F_p(t).

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "tolerant/error.hpp"

namespace tolerant {

enum class FieldKind { kRationals, kPrimeField, kRationalFunctionField };

class FieldDescriptor {
 public:
  // Largest accepted modulus is below 2^31 so residue products fit in 64 bits.
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::kRationals, 0); }
  static FieldDescriptor prime_field(std::uint64_t p);
  static FieldDescriptor rational_function_field(std::uint64_t p);

  // Accepts "q", "fp:<p>" and "fpt:<p>".
  static FieldDescriptor parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  // p for F_p and F_p(t); 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t char_exponent() const noexcept { return p_ == 0 ? 1 : p_; }
  bool is_perfect() const noexcept { return kind_ != FieldKind::kRationalFunctionField; }

  std::string to_string() const;

  bool operator==(const FieldDescriptor&) const = default;

 private:
  FieldDescriptor(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Dense polynomial over F_p in the indeterminate t. Coefficient i is the
// coefficient of t^i; trailing zeros are stripped.
class ModPoly {
 public:
  explicit ModPoly(std::uint32_t p) : p_(p) {}
  ModPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static ModPoly constant(std::uint32_t p, std::uint64_t c);
  static ModPoly monomial(std::uint32_t p, std::uint64_t c, std::size_t k);

  std::uint32_t modulus() const noexcept { return p_; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

  ModPoly operator-() const;
  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly scaled(std::uint64_t c) const;
  ModPoly monic() const;

  // (quotient, remainder); throws DIVISION_BY_ZERO for a zero divisor.
  static std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static ModPoly gcd(ModPoly a, ModPoly b);

  // f(t)^p = f(t^p) over F_p.
  ModPoly frobenius() const;

  std::string to_string(char var = 't') const;

  bool operator==(const ModPoly&) const = default;

 private:
  void normalize();

  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

// Reduced fraction num/den over F_p[t] with monic denominator.
struct RationalFunction {
  ModPoly num;
  ModPoly den;

  bool operator==(const RationalFunction&) const = default;
};

class FieldElement {
 public:
  static FieldElement zero(const FieldDescriptor& field);
  static FieldElement one(const FieldDescriptor& field);
  static FieldElement from_integer(const FieldDescriptor& field, const mpz_class& n);
  static FieldElement from_integer(const FieldDescriptor& field, long n) {
    return from_integer(field, mpz_class(n));
  }
  // num/den mapped into the field; DIVISION_BY_ZERO if den vanishes there.
  static FieldElement from_fraction(const FieldDescriptor& field, const mpz_class& num,
                                    const mpz_class& den);
  // The indeterminate t of F_p(t).
  static FieldElement indeterminate(const FieldDescriptor& field);
  static FieldElement from_rational_function(const FieldDescriptor& field, ModPoly num,
                                             ModPoly den);

  const FieldDescriptor& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

  FieldElement inverse() const;
  // Negative exponents invert first.
  FieldElement pow(const mpz_class& exponent) const;
  FieldElement pow(long exponent) const { return pow(mpz_class(exponent)); }

  // c^(p^a).
  FieldElement frobenius_power(unsigned a) const;
  // The unique d with d^p = c over a perfect field of characteristic p.
  FieldElement pth_root() const;

  // Canonical text: "a" or "a/b" over Q, the residue over F_p, and
  // "N" or "N/D" (sums parenthesized) over F_p(t).
  std::string to_string() const;

  // True when the stored representation is already in canonical form.
  bool is_canonical() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const RationalFunction& rational_function() const {
    return std::get<RationalFunction>(value_);
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  using Value = std::variant<mpq_class, std::uint32_t, RationalFunction>;

  FieldElement(FieldDescriptor field, Value value)
      : field_(field), value_(std::move(value)) {}

  FieldDescriptor field_;
  Value value_;
};

inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

// Throws FIELD_MISMATCH unless both descriptors agree.
void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b);

}  // namespace tolerant
