#pragma once

#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "tolerant/expr.hpp"
#include "tolerant/tolerant.hpp"

namespace tolerant::testing {

inline FieldDescriptor Q() { return FieldDescriptor::rationals(); }
inline FieldDescriptor Fp(std::uint64_t p) { return FieldDescriptor::prime_field(p); }
inline FieldDescriptor Fpt(std::uint64_t p) { return FieldDescriptor::rational_function_field(p); }

inline Polynomial P(const std::string& text, const FieldDescriptor& field = Q()) {
  return parse_polynomial(text, field);
}

// A constant expression such as "6561/256" or "4*t^5" as a field element.
inline FieldElement E(const std::string& text, const FieldDescriptor& field = Q()) {
  const Polynomial c = parse_polynomial(text, field);
  return c.is_zero() ? FieldElement::zero(field) : c.leading();
}

inline Factorization F(const std::string& text, const FieldDescriptor& field = Q()) {
  return parse_factored(text, field);
}

// Expects `fn` to throw tolerant::Error with the given code.
inline void expect_error(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(to_string(e.code()), to_string(code)) << e.what();
  }
}

}  // namespace tolerant::testing

namespace tolerant {

inline void PrintTo(const FieldElement& a, std::ostream* os) { *os << a.to_string(); }
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << to_string(f); }

}  // namespace tolerant
