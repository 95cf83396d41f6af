#include "tolerant/resultant.hpp"

#include <algorithm>
#include <cstdint>

namespace tolerant {

namespace {

bool is_zero(const FieldElement& a) { return a.is_zero(); }
FieldElement divide_exact(const FieldElement& a, const FieldElement& b) { return a / b; }

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Gaussian elimination over an integral domain with exact
// division. Every intermediate entry is a minor of the input, so the
// divisions by the previous pivot are exact.
template <class T>
T bareiss_determinant(Matrix<T> m, const T& one, const T& zero) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return zero;
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T cross = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = is_zero(cross) ? zero : divide_exact(cross, previous);
      }
      m[i][k] = zero;
    }
    previous = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// Rows 0..deg_b-1 carry a, the remaining deg_a rows carry b; coefficient
// vectors are indexed by power with exact degree size()-1.
template <class T>
Matrix<T> sylvester_matrix(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  Matrix<T> s(m + n, std::vector<T>(m + n, zero));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s[i][i + (m - k)] = a[k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + (n - k)] = b[k];
  }
  return s;
}

// Dense polynomials over Z/p with p < 2^31, so products of residues fit in
// 64 bits. Index i holds the coefficient of the i-th power.
using Residues = std::vector<std::uint64_t>;

// A word-size prime whose `x % p` uses Barrett reduction instead of division.
class Zp {
 public:
  explicit Zp(std::uint64_t p) : p_(p), m_(~std::uint64_t{0} / p) {}
  operator std::uint64_t() const { return p_; }

  friend std::uint64_t operator%(std::uint64_t x, const Zp& z) {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * z.m_) >> 64);
    std::uint64_t r = x - q * z.p_;
    while (r >= z.p_) r -= z.p_;
    return r;
  }

 private:
  std::uint64_t p_;
  std::uint64_t m_;
};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, const Zp& p) {
  std::uint64_t r = 1;
  for (b %= p; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, const Zp& p) { return pow_mod(a, p - 2, p); }

void trim(Residues& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b in place; b nonzero with b.back() != 0.
void reduce(Residues& a, const Residues& b, const Zp& p) {
  const std::uint64_t inv = inv_mod(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t q = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - db;
    if (q != 0) {
      for (std::size_t k = 0; k <= db; ++k) a[shift + k] = (a[shift + k] + (p - q) * b[k]) % p;
    }
    a.pop_back();
    trim(a);
  }
}

// res(a, b) by the Euclidean remainder sequence on trimmed inputs.
std::uint64_t resultant_mod(Residues a, Residues b, const Zp& p) {
  std::uint64_t acc = 1;
  for (;;) {
    if (a.empty() || b.empty()) return 0;
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    if (da == 0) return acc * pow_mod(a[0], db, p) % p;
    if (db == 0) return acc * pow_mod(b[0], da, p) % p;
    if (da < db) {
      if (da % 2 == 1 && db % 2 == 1) acc = (p - acc) % p;
      std::swap(a, b);
      continue;
    }
    // res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r), r = a mod b.
    Residues r = a;
    reduce(r, b, p);
    if (r.empty()) return 0;
    if (da % 2 == 1 && db % 2 == 1) acc = (p - acc) % p;
    acc = acc * pow_mod(b.back(), da - (r.size() - 1), p) % p;
    a = std::move(b);
    b = std::move(r);
  }
}

// inv[i] = 1/i mod p for 1 <= i < m, by inv[i] = -(p / i) inv[p mod i].
Residues small_inverses(std::size_t m, const Zp& p) {
  Residues inv(std::max<std::size_t>(m, 2), 0);
  inv[1] = 1;
  const std::uint64_t q = p;
  for (std::size_t i = 2; i < m; ++i) inv[i] = (q - (q / i) * inv[q % i] % p) % p;
  return inv;
}

// Values at distinct points xs to monomial coefficients via Newton
// differences; inv_gap(i, j) = 1/(xs[i] - xs[j]).
template <class InvGap>
Residues interpolate_mod(const Residues& xs, Residues ys, const Zp& p, InvGap&& inv_gap) {
  const std::size_t n = ys.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] + p - ys[i - 1]) * inv_gap(i, i - level) % p;
  }
  Residues acc;
  acc.reserve(n + 1);
  for (std::size_t i = n; i-- > 0;) {
    // acc = acc * (x - xs[i]) + ys[i]
    acc.insert(acc.begin(), 0);
    const std::uint64_t shift = p - xs[i] % p;
    for (std::size_t k = 0; k + 1 < acc.size(); ++k) acc[k] = (acc[k] + shift * acc[k + 1]) % p;
    acc[0] = (acc[0] + ys[i]) % p;
  }
  acc.resize(n, 0);
  return acc;
}

// Sample points u = 0..count-1. When the resultant is even in u it is
// interpolated in w = u^2 instead, from the same number of points, which
// then covers twice the u-degree. Needs 2 * count <= p.
struct USamples {
  std::size_t count;
  bool even;
};

// res_x(f, H) modulo p as coefficients in u (in u^2 when even), where h[j]
// is the coefficient of x^j as a polynomial in u. Needs lc(f) nonzero mod p;
// h.size() - 1 is the formal x-degree.
Residues resultant_in_u_mod(const Residues& f, const std::vector<Residues>& h, USamples samples, const Zp& p) {
  const std::size_t dg = h.size() - 1;
  const std::size_t count = samples.count;
  Residues values(count), xs(count);
  Residues slice(dg + 1);
  for (std::size_t u0 = 0; u0 < count; ++u0) {
    xs[u0] = samples.even ? u0 * u0 : u0;
    for (std::size_t j = 0; j <= dg; ++j) {
      std::uint64_t v = 0;
      for (std::size_t i = h[j].size(); i-- > 0;) v = (v * u0 + h[j][i]) % p;
      slice[j] = v;
    }
    Residues g = slice;
    trim(g);
    if (g.empty()) {
      values[u0] = 0;
      continue;
    }
    // With formal x-degree dg, res(f, G(u0)) picks up lc(f)^{dg - deg G(u0)}.
    values[u0] = resultant_mod(f, g, p) * pow_mod(f.back(), dg - (g.size() - 1), p) % p;
  }
  const Residues inv = small_inverses(2 * count, p);
  if (samples.even) {
    // u_i^2 - u_j^2 = (u_i - u_j)(u_i + u_j).
    return interpolate_mod(xs, std::move(values), p, [&](std::size_t i, std::size_t j) { return inv[i - j] * inv[i + j] % p; });
  }
  return interpolate_mod(xs, std::move(values), p, [&](std::size_t i, std::size_t j) { return inv[i - j]; });
}

std::uint64_t residue(const mpz_class& a, std::uint64_t p) { return mpz_fdiv_ui(a.get_mpz_t(), p); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Polynomials in t with integer coefficients, and lifted inputs f[x][t] and
// h[x][u][t]. Over Q and F_p the t-dimension has length one.
using IntPoly = std::vector<mpz_class>;

struct Lifted {
  std::vector<IntPoly> f;
  std::vector<std::vector<IntPoly>> h;
};

std::size_t t_degree(const std::vector<IntPoly>& row) {
  std::size_t d = 0;
  for (const auto& c : row) d = std::max(d, c.empty() ? 0 : c.size() - 1);
  return d;
}

mpz_class l1_norm(const IntPoly& a) {
  mpz_class s = 0;
  for (const auto& c : a) s += abs(c);
  return s;
}

std::uint64_t eval_mod(const IntPoly& a, std::uint64_t t0, const Zp& p) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = (v * t0 + residue(a[i], p)) % p;
  return v;
}

// Square of a bound on every coefficient of the Sylvester determinant:
// Hadamard's inequality on the matrix of l1 norms, which dominates the
// determinant on the unit torus.
mpz_class squared_bound(const Lifted& in) {
  const std::size_t n = in.f.size() - 1;
  const std::size_t dg = in.h.size() - 1;
  mpz_class f_row = 0, h_row = 0;
  for (const auto& c : in.f) {
    const mpz_class a = l1_norm(c);
    f_row += a * a;
  }
  for (const auto& row : in.h) {
    mpz_class a = 0;
    for (const auto& c : row) a += l1_norm(c);
    h_row += a * a;
  }
  mpz_class out, part;
  mpz_pow_ui(out.get_mpz_t(), f_row.get_mpz_t(), dg);
  mpz_pow_ui(part.get_mpz_t(), h_row.get_mpz_t(), n);
  return out * part;
}

// res_x(f, H) over Z[t] as [u-power][t-power] (u^2-powers when even), by
// sampling t and u modulo word-size primes and Chinese remaindering.
std::vector<IntPoly> integer_resultant_in_u(const Lifted& in, USamples samples) {
  const std::size_t n = in.f.size() - 1;
  const std::size_t dg = in.h.size() - 1;
  std::size_t dt_h = 0;
  for (const auto& row : in.h) dt_h = std::max(dt_h, t_degree(row));
  const std::size_t t_count = dg * t_degree(in.f) + n * dt_h + 1;
  // Modulus must exceed twice the bound: M^2 > 4 B^2.
  const mpz_class target = 4 * squared_bound(in);

  std::vector<IntPoly> acc(samples.count, IntPoly(t_count, 0));
  mpz_class modulus = 1;
  std::uint64_t prime = FieldDescriptor::kMaxModulus + 1;
  while (modulus * modulus <= target) {
    do --prime;
    while (!is_prime(prime));
    const Zp p(prime);
    // Sample t0 where the formal x-degrees survive.
    Residues ts;
    std::vector<Residues> per_t;
    for (std::uint64_t t0 = 0; ts.size() < t_count && t0 < p; ++t0) {
      Residues fp(n + 1);
      for (std::size_t i = 0; i <= n; ++i) fp[i] = eval_mod(in.f[i], t0, p);
      if (fp.back() == 0) continue;
      std::vector<Residues> hp(dg + 1);
      for (std::size_t j = 0; j <= dg; ++j) {
        for (const auto& c : in.h[j]) hp[j].push_back(eval_mod(c, t0, p));
      }
      ts.push_back(t0);
      per_t.push_back(resultant_in_u_mod(fp, hp, samples, p));
    }
    const std::uint64_t inv = inv_mod(residue(modulus, p), p);
    const Residues gaps = small_inverses(ts.back() + 1, p);
    for (std::size_t k = 0; k < samples.count; ++k) {
      Residues ys(t_count);
      for (std::size_t i = 0; i < t_count; ++i) ys[i] = per_t[i][k];
      const Residues r =
          interpolate_mod(ts, std::move(ys), p, [&](std::size_t i, std::size_t j) { return gaps[ts[i] - ts[j]]; });
      for (std::size_t i = 0; i < t_count; ++i) {
        const std::uint64_t d = (r[i] + p - residue(acc[k][i], p)) % p * inv % p;
        acc[k][i] += modulus * static_cast<unsigned long>(d);
      }
    }
    modulus *= static_cast<unsigned long>(p);
  }
  const mpz_class half = modulus / 2;
  for (auto& row : acc) {
    for (auto& c : row) {
      if (c > half) c -= modulus;
    }
  }
  return acc;
}

IntPoly lift(const ModPoly& a) { return IntPoly(a.coeffs().begin(), a.coeffs().end()); }

ModPoly reduce(const IntPoly& a, std::uint32_t p) {
  std::vector<std::uint32_t> c;
  c.reserve(a.size());
  for (const auto& v : a) c.push_back(static_cast<std::uint32_t>(residue(v, p)));
  return ModPoly(p, std::move(c));
}

ModPoly lcm(const ModPoly& a, const ModPoly& b) { return ModPoly::divmod(a * b, ModPoly::gcd(a, b)).first.monic(); }

// Integral form of a list of coefficients: Z for Q and F_p, F_p[t] for F_p(t).
// Returns the lifted coefficients and the common denominator d they were
// multiplied by.
std::pair<std::vector<IntPoly>, FieldElement> clear_denominators(const FieldDescriptor& field,
                                                                 const std::vector<FieldElement>& coeffs) {
  std::vector<IntPoly> out;
  out.reserve(coeffs.size());
  switch (field.kind()) {
    case FieldKind::kPrimeField:
      for (const auto& c : coeffs) out.push_back(IntPoly{c.residue()});
      return {out, FieldElement::one(field)};
    case FieldKind::kRationals: {
      mpz_class d = 1;
      for (const auto& c : coeffs) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.rational().get_den_mpz_t());
      for (const auto& c : coeffs) out.push_back(IntPoly{mpz_class(c.rational() * d)});
      return {out, FieldElement::from_integer(field, d)};
    }
    case FieldKind::kRationalFunctionField: {
      const std::uint32_t p = field.characteristic();
      ModPoly d = ModPoly::constant(p, 1);
      for (const auto& c : coeffs) d = lcm(d, c.rational_function().den);
      for (const auto& c : coeffs) {
        const RationalFunction& r = c.rational_function();
        out.push_back(lift(ModPoly::divmod(r.num * d, r.den).first));
      }
      return {out, FieldElement::from_rational_function(field, d, ModPoly::constant(p, 1))};
    }
  }
  return {out, FieldElement::one(field)};
}

// Maps lifted coefficients back into the field, spacing them `stride` apart.
Polynomial descend(const FieldDescriptor& field, const std::vector<IntPoly>& res, std::size_t stride) {
  std::vector<FieldElement> out(stride * (res.size() - 1) + 1, FieldElement::zero(field));
  for (std::size_t k = 0; k < res.size(); ++k) {
    if (field.kind() == FieldKind::kRationalFunctionField) {
      const std::uint32_t p = field.characteristic();
      out[k * stride] = FieldElement::from_rational_function(field, reduce(res[k], p), ModPoly::constant(p, 1));
    } else {
      out[k * stride] = FieldElement::from_integer(field, res[k][0]);
    }
  }
  return Polynomial(field, std::move(out));
}

Polynomial from_residues(const FieldDescriptor& field, const Residues& r, std::size_t stride) {
  std::vector<FieldElement> out(stride * (r.size() - 1) + 1, FieldElement::zero(field));
  for (std::size_t k = 0; k < r.size(); ++k) out[k * stride] = FieldElement::from_integer(field, static_cast<long>(r[k]));
  return Polynomial(field, std::move(out));
}

}  // namespace

UPolynomial::UPolynomial(FieldDescriptor field, std::vector<Polynomial> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field());
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int UPolynomial::x_degree() const {
  int d = Polynomial::kNegInfinity;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

Polynomial UPolynomial::x_coefficient(std::size_t j) const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.coeff(j));
  return Polynomial(field_, std::move(out));
}

Polynomial UPolynomial::at(const FieldElement& u0) const {
  Polynomial acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc.scaled(u0) + *it;
  return acc;
}

FieldElement sylvester_resultant(const Polynomial& f, const Polynomial& g) {
  require_same_field(f.field(), g.field());
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::kZeroInput, "resultant of a zero polynomial");
  std::vector<FieldElement> a(f.coeffs().begin(), f.coeffs().end());
  std::vector<FieldElement> b(g.coeffs().begin(), g.coeffs().end());
  const FieldElement zero = FieldElement::zero(f.field());
  return bareiss_determinant(sylvester_matrix(a, b, zero), FieldElement::one(f.field()), zero);
}

Polynomial resultant_in_u(const Polynomial& f, const UPolynomial& g) {
  require_same_field(f.field(), g.field());
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::kZeroInput, "resultant of a zero polynomial");
  const FieldDescriptor& field = f.field();
  const int n = f.degree();
  const int dg = g.x_degree();
  if (n == 0) return Polynomial::constant(f.leading().pow(static_cast<long>(dg)));
  std::vector<Polynomial> rows;
  std::size_t du = 0;
  for (int j = 0; j <= dg; ++j) {
    rows.push_back(g.x_coefficient(static_cast<std::size_t>(j)));
    if (!rows.back().is_zero()) du = std::max(du, static_cast<std::size_t>(rows.back().degree()));
  }
  const USamples samples{static_cast<std::size_t>(n) * du + 1, false};

  if (field.kind() == FieldKind::kPrimeField && 2 * samples.count <= field.characteristic()) {
    const Zp p(field.characteristic());
    Residues fr;
    for (const auto& c : f.coeffs()) fr.push_back(c.residue());
    std::vector<Residues> hr(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (const auto& c : rows[j].coeffs()) hr[j].push_back(c.residue());
    }
    return from_residues(field, resultant_in_u_mod(fr, hr, samples, p), 1);
  }
  // Lift to Z[t], where the Sylvester determinant reduces back correctly.
  // res(d_f f, d_h H) = d_f^{dg} d_h^n res(f, H).
  Lifted lifted;
  auto [fz, df] = clear_denominators(field, std::vector<FieldElement>(f.coeffs().begin(), f.coeffs().end()));
  lifted.f = std::move(fz);
  std::vector<FieldElement> all;
  for (const auto& row : rows) all.insert(all.end(), row.coeffs().begin(), row.coeffs().end());
  auto [hz, dh] = clear_denominators(field, all);
  std::size_t next = 0;
  for (const auto& row : rows) {
    lifted.h.emplace_back(hz.begin() + next, hz.begin() + next + row.coeffs().size());
    next += row.coeffs().size();
  }
  const FieldElement scale = df.pow(static_cast<long>(dg)) * dh.pow(static_cast<long>(n));
  return descend(field, integer_resultant_in_u(lifted, samples), 1).scaled(scale.inverse());
}

Polynomial shift_resultant(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroInput, "resultant of a zero polynomial");
  const FieldDescriptor& field = f.field();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 0) throw Error(ErrorCode::kConstantInput, "shift resultant needs a nonconstant polynomial");
  // The resultant is lc^{dg+n} prod_{i<j} (u^2 - (r_i - r_j)^2): even, of
  // degree n(n-1) in u.
  const USamples samples{n * (n - 1) / 2 + 1, true};
  // Coefficient of x^j u^{i-1} in G is binom(i+j, i) f_{i+j}.
  auto series = [n](auto&& coeff, auto&& scale_by_binomial) {
    using Row = std::vector<std::decay_t<decltype(coeff(0))>>;
    std::vector<Row> h(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 1; i + j <= n; ++i) {
        h[j].push_back(scale_by_binomial(coeff(i + j), binomial(i + j, i)));
      }
    }
    return h;
  };

  if (field.kind() == FieldKind::kPrimeField && 2 * samples.count <= field.characteristic()) {
    const Zp p(field.characteristic());
    Residues fr;
    for (const auto& c : f.coeffs()) fr.push_back(c.residue());
    auto h = series([&](std::size_t k) { return fr[k]; },
                    [&](std::uint64_t c, const mpz_class& b) { return c * residue(b, p) % p; });
    // Drop x-rows that vanish mod p so the degree is exact.
    while (h.size() > 1 && std::all_of(h.back().begin(), h.back().end(), [](auto v) { return v == 0; })) h.pop_back();
    return from_residues(field, resultant_in_u_mod(fr, h, samples, p), 2);
  }
  if (field.kind() == FieldKind::kRationalFunctionField) {
    // Lift the series over the field instead; its coefficients stay below p.
    std::vector<Polynomial> coeffs;
    for (std::size_t i = 1; i <= n; ++i) coeffs.push_back(hasse_derivative(f, static_cast<unsigned>(i)));
    return resultant_in_u(f, UPolynomial(field, std::move(coeffs)));
  }
  // Over Z[t] the series of the lifted polynomial has formal x-degree n - 1
  // and reduces to the series over the field; the formal degree costs
  // lc^{n-1-dg}, and clearing d from f costs d^{2n-1}.
  Lifted lifted;
  auto [fz, d] = clear_denominators(field, std::vector<FieldElement>(f.coeffs().begin(), f.coeffs().end()));
  lifted.f = std::move(fz);
  lifted.h = series([&](std::size_t k) { return lifted.f[k]; },
                    [](IntPoly c, const mpz_class& b) {
                      for (auto& v : c) v *= b;
                      return c;
                    });
  int dg = -1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 1; i + j <= n; ++i) {
      if (!(FieldElement::from_integer(field, binomial(i + j, i)) * f.coeff(i + j)).is_zero()) dg = static_cast<int>(j);
    }
  }
  const FieldElement scale = d.pow(2L * static_cast<long>(n) - 1) * f.leading().pow(static_cast<long>(n) - 1 - dg);
  return descend(field, integer_resultant_in_u(lifted, samples), 2).scaled(scale.inverse());
}

FieldElement discriminant(const Polynomial& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::kConstantInput, "discriminant needs a nonconstant polynomial");
  const Polynomial df = f.derivative();
  if (df.is_zero()) return FieldElement::zero(f.field());
  // res(f, f') = a_n^{deg f'} prod f'(r_i) and prod f'(r_i) = (-1)^{binom(n,2)} a_n^{2-n} disc(f).
  const long sign_exponent = static_cast<long>(n) * (n - 1) / 2;
  FieldElement d = sylvester_resultant(f, df) * f.leading().pow(static_cast<long>(n - 2 - df.degree()));
  return sign_exponent % 2 == 0 ? d : -d;
}

}  // namespace tolerant
