#include "eqv/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace eqv {

namespace {

using Poly = std::vector<Rational>;

void require_prime(int p) {
  if (!is_prime(p)) throw Error(Errc::invalid_modulus, "cyclotomic field needs prime p, got " + std::to_string(p));
}

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Polynomial long division over Q; divisor must be nonzero and trimmed.
void poly_divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  trim(rem);
  quot.assign(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, Rational());
  const Rational lead_inv = den.back().inverse();
  while (!rem.empty() && rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    const Rational factor = rem.back() * lead_inv;
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= factor * den[i];
    rem.pop_back();
    trim(rem);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

CycloNum::CycloNum(int p) : p_(p) {
  require_prime(p);
  coeffs_.assign(static_cast<std::size_t>(p - 1), Rational());
}

CycloNum::CycloNum(int p, const Rational& q) : CycloNum(p) { coeffs_[0] = q; }

CycloNum CycloNum::root_power(int p, std::int64_t e) {
  CycloNum out(p);
  const std::int64_t r = reduce_mod(e, p);
  if (r == p - 1) {
    for (auto& c : out.coeffs_) c = Rational(-1);
  } else {
    out.coeffs_[static_cast<std::size_t>(r)] = Rational(1);
  }
  return out;
}

CycloNum CycloNum::from_polynomial(int p, std::span<const Rational> poly) {
  CycloNum out(p);
  // Fold t^i -> t^{i mod p}, then eliminate t^{p-1} = -(1 + ... + t^{p-2}).
  std::vector<Rational> cyc(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < poly.size(); ++i) cyc[i % static_cast<std::size_t>(p)] += poly[i];
  const Rational top = cyc[static_cast<std::size_t>(p - 1)];
  for (std::size_t i = 0; i + 1 < cyc.size(); ++i) out.coeffs_[i] = cyc[i] - top;
  return out;
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) {
    std::ostringstream os;
    os << *this;
    throw Error(Errc::not_rational, "cyclotomic value " + os.str() + " is not rational");
  }
  return coeffs_[0];
}

std::complex<double> CycloNum::embed(std::int64_t k) const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce_mod(k * static_cast<std::int64_t>(i), p_)) / p_;
    acc += coeffs_[i].to_double() * std::polar(1.0, angle);
  }
  return acc;
}

CycloNum CycloNum::galois(std::int64_t k) const {
  if (reduce_mod(k, p_) == 0) throw Error(Errc::invalid_argument, "Galois exponent divisible by p");
  std::vector<Rational> poly(static_cast<std::size_t>(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    poly[static_cast<std::size_t>(reduce_mod(k * static_cast<std::int64_t>(i), p_))] += coeffs_[i];
  }
  return from_polynomial(p_, poly);
}

Rational CycloNum::trace() const {
  // Tr(1) = p-1, Tr(zeta^i) = -1 for 0 < i < p.
  Rational acc = coeffs_[0] * Rational(p_ - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) acc -= coeffs_[i];
  return acc;
}

void CycloNum::require_same_field(const CycloNum& o) const {
  if (p_ != o.p_) {
    throw Error(Errc::modulus_mismatch,
                "Q(zeta_" + std::to_string(p_) + ") vs Q(zeta_" + std::to_string(o.p_) + ")");
  }
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  require_same_field(o);
  const std::size_t n = static_cast<std::size_t>(p_);
  std::vector<Rational> cyc(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      cyc[(i + j) % n] += coeffs_[i] * o.coeffs_[j];
    }
  }
  *this = from_polynomial(p_, cyc);
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) {
  bool first = true;
  const auto coeffs = x.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[i] << ")";
    if (i == 1) os << "z";
    if (i > 1) os << "z^" << i;
  }
  if (first) os << "0";
  return os;
}

CycloNum cyclo_add(const CycloNum& x, const CycloNum& y) { return x + y; }
CycloNum cyclo_mul(const CycloNum& x, const CycloNum& y) { return x * y; }
CycloNum cyclo_neg(const CycloNum& x) { return -x; }

CycloNum cyclo_inv(const CycloNum& x) {
  if (x.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero in Q(zeta_p)");
  const int p = x.prime();
  // Invariant: s_i * x = r_i (mod Phi_p).
  Poly r0(static_cast<std::size_t>(p), Rational(1));  // Phi_p
  Poly r1(x.coefficients().begin(), x.coefficients().end());
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, rem;
    poly_divmod(r0, r1, q, rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_p is irreducible, so the last nonzero remainder is a constant.
  const Rational c = r1.at(0);
  CycloNum out = CycloNum::from_polynomial(p, s1);
  out *= c.inverse();
  return out;
}

CycloNum inverse_root_minus_one(int p, std::int64_t e) {
  if (reduce_mod(e, p) == 0) throw Error(Errc::zero_rotation, "zeta^e - 1 = 0 for e divisible by p");
  std::vector<Rational> poly(static_cast<std::size_t>(p));
  for (std::int64_t j = 1; j < p; ++j) poly[static_cast<std::size_t>(reduce_mod(e * j, p))] += Rational(j, p);
  return CycloNum::from_polynomial(p, poly);
}

CycloNum cot_ratio(int p, std::int64_t e) {
  CycloNum num = CycloNum::root_power(p, e);
  num += CycloNum(p, Rational(1));
  return num * inverse_root_minus_one(p, e);
}

CycloNum eval_point_term(int p, std::int64_t k, std::int64_t a, std::int64_t b) {
  if (reduce_mod(a, p) == 0 || reduce_mod(b, p) == 0) {
    throw Error(Errc::zero_rotation, "rotation numbers (" + std::to_string(a) + ", " + std::to_string(b) +
                                         ") not both nonzero mod " + std::to_string(p));
  }
  return cot_ratio(p, k * a) * cot_ratio(p, k * b);
}

CycloNum eval_sphere_term(int p, std::int64_t k, std::int64_t c, const Integer& alpha) {
  if (reduce_mod(c, p) == 0) throw Error(Errc::zero_rotation, "normal rotation divisible by p");
  const CycloNum inv = inverse_root_minus_one(p, k * c);
  CycloNum out = CycloNum::root_power(p, k * c) * inv * inv;
  out *= Rational(-4) * Rational(alpha);
  return out;
}

CycloNum sin_squared(int p, std::int64_t e) {
  CycloNum out(p, Rational(2));
  out -= CycloNum::root_power(p, e);
  out -= CycloNum::root_power(p, -e);
  out *= Rational(1, 4);
  return out;
}

Rational galois_sum(int p, const std::function<CycloNum(std::int64_t)>& f) {
  CycloNum acc(p);
  for (std::int64_t k = 1; k < p; ++k) acc += f(k);
  return acc.rational_value();
}

}  // namespace eqv
