#include "tolerant/field.hpp"

#include <algorithm>
#include <charconv>

namespace tolerant {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero residue");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(const mpz_class& n, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint64_t parse_modulus(std::string_view digits, std::string_view whole) {
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorCode::kInvalidField, "bad field descriptor '" + std::string(whole) + "'");
  }
  return p;
}

void check_modulus(std::uint64_t p) {
  if (p < 2 || p > FieldDescriptor::kMaxModulus || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidField,
                "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  check_modulus(p);
  return FieldDescriptor(FieldKind::kPrimeField, static_cast<std::uint32_t>(p));
}

FieldDescriptor FieldDescriptor::rational_function_field(std::uint64_t p) {
  check_modulus(p);
  return FieldDescriptor(FieldKind::kRationalFunctionField, static_cast<std::uint32_t>(p));
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fpt:")) return rational_function_field(parse_modulus(text.substr(4), text));
  if (text.starts_with("fp:")) return prime_field(parse_modulus(text.substr(3), text));
  throw Error(ErrorCode::kInvalidField, "bad field descriptor '" + std::string(text) + "'");
}

std::string FieldDescriptor::to_string() const {
  switch (kind_) {
    case FieldKind::kRationals: return "q";
    case FieldKind::kPrimeField: return "fp:" + std::to_string(p_);
    case FieldKind::kRationalFunctionField: return "fpt:" + std::to_string(p_);
  }
  return {};
}

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFieldMismatch,
                "field mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

// ---------------------------------------------------------------------------
// ModPoly

ModPoly::ModPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  normalize();
}

ModPoly ModPoly::constant(std::uint32_t p, std::uint64_t c) { return ModPoly(p, {static_cast<std::uint32_t>(c % p)}); }

ModPoly ModPoly::monomial(std::uint32_t p, std::uint64_t c, std::size_t k) {
  std::vector<std::uint32_t> coeffs(k + 1, 0);
  coeffs[k] = static_cast<std::uint32_t>(c % p);
  return ModPoly(p, std::move(coeffs));
}

void ModPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::operator-() const {
  ModPoly r = *this;
  for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
  return r;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  const std::uint32_t p = a.p_;
  ModPoly r(p);
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint64_t s = (i < a.c_.size() ? a.c_[i] : 0) + std::uint64_t{i < b.c_.size() ? b.c_[i] : 0u};
    r.c_[i] = static_cast<std::uint32_t>(s % p);
  }
  r.normalize();
  return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) { return a + (-b); }

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  const std::uint32_t p = a.p_;
  ModPoly r(p);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  // Below 2^20 a column sum of products stays far from overflow.
  const bool lazy = p < (1u << 20);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    const std::uint64_t ai = a.c_[i];
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = lazy ? acc[i + j] + ai * b.c_[j] : (acc[i + j] + ai * b.c_[j]) % p;
    }
  }
  r.c_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<std::uint32_t>(acc[k] % p);
  r.normalize();
  return r;
}

ModPoly ModPoly::scaled(std::uint64_t c) const {
  ModPoly r = *this;
  c %= p_;
  for (auto& x : r.c_) x = static_cast<std::uint32_t>(x * c % p_);
  r.normalize();
  return r;
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(leading(), p_));
}

namespace {

// Reduces rem modulo b in place, recording quotient digits when asked.
void reduce_in_place(std::vector<std::uint32_t>& rem, const std::vector<std::uint32_t>& b, std::uint32_t p,
                     std::vector<std::uint32_t>* quot) {
  const int db = static_cast<int>(b.size()) - 1;
  const std::uint64_t inv = mod_inverse(b.back(), p);
  for (int k = static_cast<int>(rem.size()) - 1 - db; k >= 0; --k) {
    const std::uint64_t top = rem[k + db];
    if (top == 0) continue;
    const std::uint64_t q = top * inv % p;
    if (quot) (*quot)[k] = static_cast<std::uint32_t>(q);
    const std::uint64_t neg = p - q;
    for (int j = 0; j <= db; ++j) rem[k + j] = static_cast<std::uint32_t>((rem[k + j] + neg * b[j]) % p);
  }
}

}  // namespace

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  const std::uint32_t p = a.p_;
  ModPoly rem = a;
  ModPoly quot(p);
  if (a.degree() < b.degree()) return {quot, rem};
  quot.c_.assign(a.c_.size() - b.c_.size() + 1, 0);
  reduce_in_place(rem.c_, b.c_, p, &quot.c_);
  quot.normalize();
  rem.normalize();
  return {quot, rem};
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    if (a.degree() >= b.degree()) {
      reduce_in_place(a.c_, b.c_, a.p_, nullptr);
      a.normalize();
    }
    std::swap(a, b);
  }
  return a.monic();
}

ModPoly ModPoly::frobenius() const {
  if (is_zero()) return *this;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(degree()) * p_ + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * p_] = c_[i];
  return ModPoly(p_, std::move(out));
}

std::string ModPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const std::uint32_t c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

RationalFunction make_rational_function(ModPoly num, ModPoly den) {
  const std::uint32_t p = num.modulus();
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return {ModPoly(p), ModPoly::constant(p, 1)};
  ModPoly g = ModPoly::gcd(num, den);
  if (!g.is_one()) {
    num = ModPoly::divmod(num, g).first;
    den = ModPoly::divmod(den, g).first;
  }
  const std::uint32_t inv = mod_inverse(den.leading(), p);
  return {num.scaled(inv), den.scaled(inv)};
}

std::string parenthesize_sum(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

FieldElement FieldElement::zero(const FieldDescriptor& field) { return from_integer(field, mpz_class(0)); }

FieldElement FieldElement::one(const FieldDescriptor& field) { return from_integer(field, mpz_class(1)); }

FieldElement FieldElement::from_integer(const FieldDescriptor& field, const mpz_class& n) {
  switch (field.kind()) {
    case FieldKind::kRationals: return FieldElement(field, mpq_class(n));
    case FieldKind::kPrimeField: return FieldElement(field, reduce(n, field.characteristic()));
    case FieldKind::kRationalFunctionField: {
      const std::uint32_t p = field.characteristic();
      return FieldElement(field, RationalFunction{ModPoly::constant(p, reduce(n, p)), ModPoly::constant(p, 1)});
    }
  }
  throw Error(ErrorCode::kInvalidField, "unknown field kind");
}

FieldElement FieldElement::from_fraction(const FieldDescriptor& field, const mpz_class& num,
                                         const mpz_class& den) {
  if (field.kind() == FieldKind::kRationals) {
    if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(field, std::move(q));
  }
  return from_integer(field, num) / from_integer(field, den);
}

FieldElement FieldElement::indeterminate(const FieldDescriptor& field) {
  if (field.kind() != FieldKind::kRationalFunctionField) {
    throw Error(ErrorCode::kUnsupportedField, "the indeterminate t exists only in F_p(t)");
  }
  const std::uint32_t p = field.characteristic();
  return FieldElement(field, RationalFunction{ModPoly::monomial(p, 1, 1), ModPoly::constant(p, 1)});
}

FieldElement FieldElement::from_rational_function(const FieldDescriptor& field, ModPoly num, ModPoly den) {
  if (field.kind() != FieldKind::kRationalFunctionField || num.modulus() != field.characteristic() ||
      den.modulus() != field.characteristic()) {
    throw Error(ErrorCode::kFieldMismatch, "rational function does not belong to " + field.to_string());
  }
  return FieldElement(field, make_rational_function(std::move(num), std::move(den)));
}

bool FieldElement::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return v == 0;
        } else if constexpr (std::is_same_v<T, std::uint32_t>) {
          return v == 0;
        } else {
          return v.num.is_zero();
        }
      },
      value_);
}

bool FieldElement::is_one() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return v == 1;
        } else if constexpr (std::is_same_v<T, std::uint32_t>) {
          return v == 1;
        } else {
          return v.num.is_one() && v.den.is_one();
        }
      },
      value_);
}

FieldElement FieldElement::operator-() const {
  switch (field_.kind()) {
    case FieldKind::kRationals: return FieldElement(field_, mpq_class(-rational()));
    case FieldKind::kPrimeField: {
      const std::uint32_t r = residue();
      return FieldElement(field_, r == 0 ? 0u : field_.characteristic() - r);
    }
    case FieldKind::kRationalFunctionField: {
      const auto& rf = rational_function();
      return FieldElement(field_, RationalFunction{-rf.num, rf.den});
    }
  }
  return *this;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  const std::uint32_t p = a.field_.characteristic();
  switch (a.field_.kind()) {
    case FieldKind::kRationals: return FieldElement(a.field_, mpq_class(a.rational() + b.rational()));
    case FieldKind::kPrimeField:
      return FieldElement(a.field_, static_cast<std::uint32_t>((std::uint64_t{a.residue()} + b.residue()) % p));
    case FieldKind::kRationalFunctionField: {
      const auto& x = a.rational_function();
      const auto& y = b.rational_function();
      if (x.den == y.den) return FieldElement(a.field_, make_rational_function(x.num + y.num, x.den));
      return FieldElement(a.field_, make_rational_function(x.num * y.den + y.num * x.den, x.den * y.den));
    }
  }
  return a;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  const std::uint32_t p = a.field_.characteristic();
  switch (a.field_.kind()) {
    case FieldKind::kRationals: return FieldElement(a.field_, mpq_class(a.rational() * b.rational()));
    case FieldKind::kPrimeField:
      return FieldElement(a.field_, static_cast<std::uint32_t>(std::uint64_t{a.residue()} * b.residue() % p));
    case FieldKind::kRationalFunctionField: {
      const auto& x = a.rational_function();
      const auto& y = b.rational_function();
      return FieldElement(a.field_, make_rational_function(x.num * y.num, x.den * y.den));
    }
  }
  return a;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero in " + field_.to_string());
  switch (field_.kind()) {
    case FieldKind::kRationals: return FieldElement(field_, mpq_class(1 / rational()));
    case FieldKind::kPrimeField: return FieldElement(field_, mod_inverse(residue(), field_.characteristic()));
    case FieldKind::kRationalFunctionField: {
      const auto& rf = rational_function();
      return FieldElement(field_, make_rational_function(rf.den, rf.num));
    }
  }
  return *this;
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
  if (exponent < 0) return inverse().pow(mpz_class(-exponent));
  if (exponent == 0) return one(field_);
  if (is_zero()) return *this;
  if (field_.kind() == FieldKind::kRationals) {
    if (!exponent.fits_ulong_p()) throw Error(ErrorCode::kUnsupportedField, "exponent too large over Q");
    const unsigned long e = exponent.get_ui();
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), rational().get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), rational().get_den_mpz_t(), e);
    return FieldElement(field_, std::move(r));
  }
  mpz_class e = exponent;
  if (field_.kind() == FieldKind::kPrimeField) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), mpz_class(residue()).get_mpz_t(), e.get_mpz_t(),
             mpz_class(field_.characteristic()).get_mpz_t());
    return FieldElement(field_, static_cast<std::uint32_t>(r.get_ui()));
  }
  FieldElement result = one(field_);
  FieldElement base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
  }
  return result;
}

FieldElement FieldElement::frobenius_power(unsigned a) const {
  if (a == 0) return *this;
  switch (field_.kind()) {
    case FieldKind::kRationals:
      throw Error(ErrorCode::kUnsupportedField, "Frobenius power needs positive characteristic");
    case FieldKind::kPrimeField: return *this;
    case FieldKind::kRationalFunctionField: {
      RationalFunction rf = rational_function();
      for (unsigned i = 0; i < a; ++i) {
        rf.num = rf.num.frobenius();
        rf.den = rf.den.frobenius();
      }
      return FieldElement(field_, std::move(rf));
    }
  }
  return *this;
}

FieldElement FieldElement::pth_root() const {
  if (field_.kind() == FieldKind::kPrimeField) return *this;
  if (field_.kind() == FieldKind::kRationals) {
    throw Error(ErrorCode::kUnsupportedField, "p-th roots need positive characteristic");
  }
  throw Error(ErrorCode::kUnsupportedField, "p-th roots need not exist in " + field_.to_string());
}

std::string FieldElement::to_string() const {
  switch (field_.kind()) {
    case FieldKind::kRationals: return rational().get_str();
    case FieldKind::kPrimeField: return std::to_string(residue());
    case FieldKind::kRationalFunctionField: {
      const auto& rf = rational_function();
      if (rf.den.is_one()) return rf.num.to_string();
      return parenthesize_sum(rf.num.to_string()) + "/" + parenthesize_sum(rf.den.to_string());
    }
  }
  return {};
}

bool FieldElement::is_canonical() const {
  switch (field_.kind()) {
    case FieldKind::kRationals: {
      const mpq_class& q = rational();
      if (q.get_den() <= 0) return false;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      return g == 1;
    }
    case FieldKind::kPrimeField: return residue() < field_.characteristic();
    case FieldKind::kRationalFunctionField: {
      const auto& rf = rational_function();
      const std::uint32_t p = field_.characteristic();
      auto reduced = [p](const ModPoly& m) {
        return m.modulus() == p && std::all_of(m.coeffs().begin(), m.coeffs().end(), [p](auto c) { return c < p; }) &&
               (m.coeffs().empty() || m.coeffs().back() != 0);
      };
      if (!reduced(rf.num) || !reduced(rf.den) || rf.den.is_zero() || rf.den.leading() != 1) return false;
      if (rf.num.is_zero()) return rf.den.is_one();
      return ModPoly::gcd(rf.num, rf.den).is_one();
    }
  }
  return false;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace tolerant
