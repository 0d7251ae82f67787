#ifndef EQV_CYCLOTOMIC_HPP
#define EQV_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "eqv/exact_arith.hpp"

namespace eqv {

/// Element of Q(zeta_p) = Q[t]/Phi_p(t), stored as the p-1 coefficients of
/// the power basis 1, zeta, ..., zeta^{p-2}. For p = 2 the basis is {1} and
/// zeta = -1.
class CycloNum {
 public:
  /// Zero of Q(zeta_p).
  explicit CycloNum(int p);
  CycloNum(int p, const Rational& q);

  /// zeta^e for any integer e.
  static CycloNum root_power(int p, std::int64_t e);
  /// Reduces an arbitrary polynomial in t (coefficient i is t^i) mod Phi_p.
  static CycloNum from_polynomial(int p, std::span<const Rational> poly);

  int prime() const { return p_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; throws NotRational unless is_rational().
  Rational rational_value() const;

  /// Image under the embedding zeta -> exp(2 pi i k / p). Double precision,
  /// cross-checks only.
  std::complex<double> embed(std::int64_t k = 1) const;

  /// Galois automorphism zeta -> zeta^k (k coprime to p).
  CycloNum galois(std::int64_t k) const;

  /// Field trace down to Q.
  Rational trace() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& q);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }
  friend CycloNum operator*(const Rational& q, CycloNum a) { return a *= q; }
  CycloNum operator-() const;

  friend bool operator==(const CycloNum&, const CycloNum&) = default;

 private:
  void require_same_field(const CycloNum& o) const;

  int p_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

CycloNum cyclo_add(const CycloNum& x, const CycloNum& y);
CycloNum cyclo_mul(const CycloNum& x, const CycloNum& y);
CycloNum cyclo_neg(const CycloNum& x);

/// Multiplicative inverse by the extended Euclidean algorithm against Phi_p.
CycloNum cyclo_inv(const CycloNum& x);

/// (zeta^e - 1)^{-1} = (1/p) sum_j j zeta^{ej}, for e not divisible by p.
CycloNum inverse_root_minus_one(int p, std::int64_t e);

/// (zeta^e + 1)/(zeta^e - 1); embeds to -i cot(pi e k / p).
CycloNum cot_ratio(int p, std::int64_t e);

/// (zeta^{ka}+1)(zeta^{kb}+1) / ((zeta^{ka}-1)(zeta^{kb}-1)).
CycloNum eval_point_term(int p, std::int64_t k, std::int64_t a, std::int64_t b);

/// -4 alpha zeta^{kc} / (zeta^{kc} - 1)^2.
CycloNum eval_sphere_term(int p, std::int64_t k, std::int64_t c, const Integer& alpha);

/// (2 - zeta^{e} - zeta^{-e}) / 4; embeds to sin^2(pi e / p).
CycloNum sin_squared(int p, std::int64_t e);

/// Sum of f(k) over k = 1..p-1, which must be rational (NotRational otherwise).
Rational galois_sum(int p, const std::function<CycloNum(std::int64_t)>& f);

}  // namespace eqv

#endif  // EQV_CYCLOTOMIC_HPP
