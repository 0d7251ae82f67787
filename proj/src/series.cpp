#include "eqv/series.hpp"

#include <algorithm>
#include <ostream>

namespace eqv {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "negative truncation order");
}

void require_nonzero(std::int64_t x, const char* what) {
  if (x == 0) throw Error(Errc::zero_rotation, std::string(what) + " must be nonzero");
}

// (t^c + 1) (t - 1) / (t^c - 1) = (t^c + 1) / [c]_t
PowerSeries half_cot_factor(std::int64_t c, int order) {
  PowerSeries num = expand_binomial_power(c, order) + PowerSeries::constant(Rational(1), order);
  return num * series_invert_unit(expand_root_unit(c, order));
}

}  // namespace

PowerSeries::PowerSeries(int order) : order_(order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational());
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries out(order);
  out.coeffs_[0] = c;
  return out;
}

PowerSeries PowerSeries::variable(int order) {
  PowerSeries out(order);
  if (order >= 1) out.coeffs_[1] = Rational(1);
  return out;
}

const Rational& PowerSeries::operator[](int i) const {
  if (i < 0 || i > order_) {
    throw Error(Errc::invalid_argument,
                "coefficient s^" + std::to_string(i) + " beyond truncation order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

PowerSeries PowerSeries::truncated(int order) const {
  require_order(order);
  if (order > order_) throw Error(Errc::invalid_argument, "cannot extend truncation order");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
  const int order = std::min(order_, o.order_);
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      out[static_cast<std::size_t>(i + j)] += coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  coeffs_ = std::move(out);
  order_ = order;
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& x) {
  bool first = true;
  for (int i = 0; i <= x.order(); ++i) {
    if (x[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x[i] << ")";
    if (i == 1) os << "s";
    if (i > 1) os << "s^" << i;
  }
  if (first) os << "0";
  return os << " + O(s^" << x.order() + 1 << ")";
}

PowerSeries series_invert_unit(const PowerSeries& x) {
  if (x[0].is_zero()) throw Error(Errc::not_a_unit, "series with zero constant term");
  const int n = x.order();
  std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
  const Rational c0 = x[0].inverse();
  inv[0] = c0;
  for (int i = 1; i <= n; ++i) {
    Rational acc;
    for (int j = 1; j <= i; ++j) acc += x[j] * inv[static_cast<std::size_t>(i - j)];
    inv[static_cast<std::size_t>(i)] = -acc * c0;
  }
  return PowerSeries(std::move(inv), n);
}

PowerSeries expand_binomial_power(std::int64_t exponent, int order) {
  require_order(order);
  if (exponent < 0) return series_invert_unit(expand_binomial_power(-exponent, order));
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  Integer binom = 1;
  for (int j = 0; j <= order; ++j) {
    coeffs[static_cast<std::size_t>(j)] = Rational(binom);
    // C(e, j+1) = C(e, j) * (e - j) / (j + 1); exact division.
    binom *= make_integer(exponent - j);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j + 1));
  }
  return PowerSeries(std::move(coeffs), order);
}

PowerSeries expand_root_unit(std::int64_t a, int order) {
  require_nonzero(a, "exponent");
  // ((1+s)^a - 1) / s, computed one order higher before the shift.
  const PowerSeries full = expand_binomial_power(a, order + 1);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) coeffs[static_cast<std::size_t>(j)] = full[j + 1];
  return PowerSeries(std::move(coeffs), order);
}

PowerSeries expand_point_term(std::int64_t a, std::int64_t b, std::int64_t lambda, int order) {
  require_nonzero(a, "rotation number a");
  require_nonzero(b, "rotation number b");
  return half_cot_factor(a, order) * half_cot_factor(b, order) * expand_binomial_power(lambda, order);
}

PowerSeries expand_sphere_term(std::int64_t c, std::int64_t alpha, std::int64_t lambda, int order) {
  require_nonzero(c, "normal rotation c");
  const PowerSeries inv = series_invert_unit(expand_root_unit(c, order));
  PowerSeries out = expand_binomial_power(c, order) * inv * inv * expand_binomial_power(lambda, order);
  return out * Rational(-4 * alpha);
}

PowerSeries expand_boundary_term(std::int64_t c, std::int64_t m, std::int64_t lambda, int order) {
  require_nonzero(c, "normal rotation c");
  PowerSeries out = PowerSeries::variable(order) * half_cot_factor(c, order) * expand_binomial_power(lambda, order);
  return out * Rational(2 * m);
}

PowerSeries expand_su2_point_term(std::int64_t a, std::int64_t b, std::int64_t ell, int order) {
  return expand_point_term(a, b, 0, order) *
         (expand_binomial_power(ell, order) + expand_binomial_power(-ell, order));
}

PowerSeries expand_su2_sphere_term(std::int64_t c, std::int64_t alpha, std::int64_t m, std::int64_t ell,
                                   int order) {
  const PowerSeries sum = expand_binomial_power(ell, order) + expand_binomial_power(-ell, order);
  const PowerSeries diff = expand_binomial_power(ell, order) - expand_binomial_power(-ell, order);
  return expand_sphere_term(c, alpha, 0, order) * sum + expand_boundary_term(c, m, 0, order) * diff;
}

}  // namespace eqv
