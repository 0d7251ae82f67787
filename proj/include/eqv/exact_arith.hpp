#ifndef EQV_EXACT_ARITH_HPP
#define EQV_EXACT_ARITH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "eqv/error.hpp"

namespace eqv {

using Integer = mpz_class;

Integer make_integer(std::int64_t v);
std::int64_t to_int64(const Integer& v);  // throws InvalidArgument on overflow

/// Exact fraction in lowest terms with positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(std::int64_t num, std::int64_t den);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const;
  Rational abs() const;
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);

/// Element of Z/n. Negative inputs are reduced into [0, n).
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);
  Residue(const Integer& value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }
  /// Representative in (-n/2, n/2].
  std::int64_t signed_value() const;
  bool is_zero() const { return value_ == 0; }

  Residue inverse() const;

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  Residue operator-() const { return Residue(-value_, modulus_); }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  void require_same_modulus(const Residue& o) const;
  std::int64_t value_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// Least non-negative representative of v mod n (n >= 1).
std::int64_t reduce_mod(std::int64_t v, std::int64_t n);
std::int64_t reduce_mod(const Integer& v, std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

Residue mod_inverse(const Integer& a, std::int64_t n);
Residue mod_inverse(std::int64_t a, std::int64_t n);

/// numerator * denominator^{-1} mod p.
Residue rational_mod(const Rational& q, std::int64_t p);

/// Unique x mod m1*m2 with x = r1 (mod m1), x = r2 (mod m2); moduli >= 1.
Residue crt_solve(const Integer& r1, std::int64_t m1, const Integer& r2, std::int64_t m2);

}  // namespace eqv

#endif  // EQV_EXACT_ARITH_HPP
