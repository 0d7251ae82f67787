#ifndef EQV_SERIES_HPP
#define EQV_SERIES_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "eqv/exact_arith.hpp"

namespace eqv {

/// Truncated power series in s = t - 1 with exact coefficients for
/// s^0 .. s^order. Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  /// Zero series.
  explicit PowerSeries(int order);
  PowerSeries(std::vector<Rational> coeffs, int order);

  static PowerSeries constant(const Rational& c, int order);
  /// The series s itself.
  static PowerSeries variable(int order);

  int order() const { return order_; }
  /// Coefficient of s^i; throws InvalidArgument beyond the truncation order.
  const Rational& operator[](int i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  bool is_zero() const;

  PowerSeries truncated(int order) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& q);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& q) { return a *= q; }
  friend PowerSeries operator*(const Rational& q, PowerSeries a) { return a *= q; }
  PowerSeries operator-() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& x);

inline PowerSeries series_add(const PowerSeries& x, const PowerSeries& y) { return x + y; }
inline PowerSeries series_mul(const PowerSeries& x, const PowerSeries& y) { return x * y; }
inline PowerSeries series_scale(const PowerSeries& x, const Rational& q) { return x * q; }

/// Multiplicative inverse; NotAUnit when the constant term vanishes.
PowerSeries series_invert_unit(const PowerSeries& x);

/// (1 + s)^exponent; negative exponents go through series_invert_unit.
PowerSeries expand_binomial_power(std::int64_t exponent, int order);

/// (t^a - 1)/(t - 1) as a series in s; its constant term is a.
PowerSeries expand_root_unit(std::int64_t a, int order);

// Fixed-point integrands multiplied by (t-1)^2, expanded about t = 1.

/// (t^a+1)(t^b+1)/((t^a-1)(t^b-1)) (t-1)^2 t^lambda
PowerSeries expand_point_term(std::int64_t a, std::int64_t b, std::int64_t lambda, int order);
/// -4 alpha t^c/(t^c-1)^2 (t-1)^2 t^lambda
PowerSeries expand_sphere_term(std::int64_t c, std::int64_t alpha, std::int64_t lambda, int order);
/// 2m (t^c+1)/(t^c-1) (t-1)^2 t^lambda
PowerSeries expand_boundary_term(std::int64_t c, std::int64_t m, std::int64_t lambda, int order);
/// point term times (t^ell + t^-ell)
PowerSeries expand_su2_point_term(std::int64_t a, std::int64_t b, std::int64_t ell, int order);
/// [-4 alpha t^c/(t^c-1)^2 (t^ell + t^-ell) + 2m (t^c+1)/(t^c-1) (t^ell - t^-ell)] (t-1)^2
PowerSeries expand_su2_sphere_term(std::int64_t c, std::int64_t alpha, std::int64_t m, std::int64_t ell,
                                   int order);

}  // namespace eqv

#endif  // EQV_SERIES_HPP
