#include "eqv/exact_arith.hpp"

#include <limits>
#include <ostream>

namespace eqv {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

// Extended Euclid on int64: returns g = gcd(a, b) and x with a*x = g (mod b).
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x) {
  std::int64_t old_r = a, r = b;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    __int128 ts = old_s - static_cast<__int128>(q) * s;
    old_s = s;
    s = ts;
  }
  x = static_cast<std::int64_t>(old_s % b);
  return old_r;
}

void require_modulus(std::int64_t n) {
  if (n < 2) throw Error(Errc::invalid_modulus, "modulus must be >= 2, got " + std::to_string(n));
}

}  // namespace

Integer make_integer(std::int64_t v) {
  Integer z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(Errc::invalid_argument, "integer " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

Rational::Rational(std::int64_t n) : v_(make_integer(n)) {}

Rational::Rational(const Integer& n) : v_(n) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(make_integer(num), make_integer(den)) {}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::parse_error, "not a rational: '" + text + "'");
  }
}

std::int64_t reduce_mod(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::int64_t reduce_mod(const Integer& v, std::int64_t n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), make_integer(n).get_mpz_t());
  return r.get_si();
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Residue::Residue(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  require_modulus(modulus);
  value_ = reduce_mod(value, modulus);
}

Residue::Residue(const Integer& value, std::int64_t modulus) : modulus_(modulus) {
  require_modulus(modulus);
  value_ = reduce_mod(value, modulus);
}

std::int64_t Residue::signed_value() const {
  return 2 * value_ > modulus_ ? value_ - modulus_ : value_;
}

Residue Residue::inverse() const { return mod_inverse(value_, modulus_); }

void Residue::require_same_modulus(const Residue& o) const {
  if (modulus_ != o.modulus_) {
    throw Error(Errc::modulus_mismatch,
                "residues mod " + std::to_string(modulus_) + " and mod " + std::to_string(o.modulus_));
  }
}

Residue& Residue::operator+=(const Residue& o) {
  require_same_modulus(o);
  value_ = reduce_mod(value_ + o.value_, modulus_);
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  require_same_modulus(o);
  value_ = reduce_mod(value_ - o.value_, modulus_);
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  require_same_modulus(o);
  value_ = mul_mod(value_, o.value_, modulus_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus() << ")";
}

Residue mod_inverse(std::int64_t a, std::int64_t n) {
  require_modulus(n);
  const std::int64_t ra = reduce_mod(a, n);
  std::int64_t x = 0;
  if (ext_gcd(ra, n, x) != 1) {
    throw Error(Errc::not_invertible, std::to_string(a) + " has no inverse mod " + std::to_string(n));
  }
  return Residue(x, n);
}

Residue mod_inverse(const Integer& a, std::int64_t n) {
  require_modulus(n);
  return mod_inverse(reduce_mod(a, n), n);
}

Residue rational_mod(const Rational& q, std::int64_t p) {
  require_modulus(p);
  const std::int64_t den = reduce_mod(q.denominator(), p);
  if (gcd(den, p) != 1) {
    throw Error(Errc::denominator_divisible, q.str() + " has denominator not invertible mod " + std::to_string(p));
  }
  return Residue(q.numerator(), p) * mod_inverse(den, p);
}

Residue crt_solve(const Integer& r1, std::int64_t m1, const Integer& r2, std::int64_t m2) {
  if (m1 < 1 || m2 < 1) throw Error(Errc::invalid_modulus, "CRT moduli must be positive");
  if (gcd(m1, m2) != 1) {
    throw Error(Errc::not_coprime, "CRT moduli " + std::to_string(m1) + " and " + std::to_string(m2));
  }
  if (m1 > std::numeric_limits<std::int64_t>::max() / m2) {
    throw Error(Errc::invalid_modulus, "CRT modulus product overflows 64 bits");
  }
  const std::int64_t m = m1 * m2;
  require_modulus(m);
  const std::int64_t a1 = reduce_mod(r1, m1);
  const std::int64_t a2 = reduce_mod(r2, m2);
  if (m2 == 1) return Residue(a1, m);
  if (m1 == 1) return Residue(a2, m);
  // x = a1 + m1 * ((a2 - a1) * m1^{-1} mod m2)
  const std::int64_t inv = mod_inverse(m1, m2).value();
  const std::int64_t t = mul_mod(reduce_mod(a2 - a1, m2), inv, m2);
  return Residue(static_cast<std::int64_t>(a1 + static_cast<__int128>(m1) * t), m);
}

}  // namespace eqv
