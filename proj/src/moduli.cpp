#include "eqv/moduli.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "eqv/congruence.hpp"
#include "eqv/cyclotomic.hpp"

namespace eqv {

namespace {

constexpr double kRhoTolerance = 1e-9;

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::invalid_modulus, std::to_string(p) + " is not prime");
}

RhoValue checked(const char* what, const Rational& exact, double approx) {
  if (std::abs(exact.to_double() - approx) > kRhoTolerance) {
    std::ostringstream os;
    os << what << ": exact " << exact << " vs float " << approx;
    throw Error(Errc::rho_mismatch, os.str());
  }
  return {exact, approx};
}

double angle(std::int64_t k, std::int64_t x, std::int64_t p) {
  return std::numbers::pi * static_cast<double>(reduce_mod(k * x, 2 * p)) / static_cast<double>(p);
}

}  // namespace

RhoValue rho_lens(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t ell) {
  require_prime(p);
  if (reduce_mod(a, p) == 0 || reduce_mod(b, p) == 0) {
    throw Error(Errc::zero_rotation, "lens space weights must be nonzero mod p");
  }
  const int q = static_cast<int>(p);
  // cot x cot y = -u_a u_b with u_x = (zeta^x + 1)/(zeta^x - 1).
  const Rational sum = galois_sum(q, [&](std::int64_t k) {
    return -(cot_ratio(q, k * a) * cot_ratio(q, k * b) * sin_squared(q, k * ell));
  });
  const Rational exact = Rational(2, p) * sum;

  double approx = 0.0;
  for (std::int64_t k = 1; k < p; ++k) {
    const double s = std::sin(angle(k, ell, p));
    approx += s * s / (std::tan(angle(k, a, p)) * std::tan(angle(k, b, p)));
  }
  approx *= 2.0 / static_cast<double>(p);
  return checked("rhoL", exact, approx);
}

RhoValue rho_surface(std::int64_t p, std::int64_t c, std::int64_t ell, std::int64_t alpha, std::int64_t m) {
  require_prime(p);
  if (reduce_mod(c, p) == 0) throw Error(Errc::zero_rotation, "normal weight must be nonzero mod p");
  const int q = static_cast<int>(p);
  const Integer alpha_z = make_integer(alpha);
  // alpha csc^2 = -4 alpha zeta^{kc}/(zeta^{kc}-1)^2.
  const Rational csc_sum =
      galois_sum(q, [&](std::int64_t k) { return eval_sphere_term(q, k, c, alpha_z) * sin_squared(q, k * ell); });
  // sin(2x) cot(y) = (zeta^{kl} - zeta^{-kl}) u_c / 2.
  const Rational sincot_sum = galois_sum(q, [&](std::int64_t k) {
    CycloNum diff = CycloNum::root_power(q, k * ell) - CycloNum::root_power(q, -k * ell);
    return diff * cot_ratio(q, k * c) * Rational(1, 2);
  });
  const Rational exact = Rational(2, p) * csc_sum - Rational(4 * m, p) * sincot_sum;

  double first = 0.0, second = 0.0;
  for (std::int64_t k = 1; k < p; ++k) {
    const double s = std::sin(angle(k, ell, p));
    const double sc = std::sin(angle(k, c, p));
    first += s * s / (sc * sc);
    second += std::sin(angle(k, 2 * ell, p)) / std::tan(angle(k, c, p));
  }
  const double approx = 2.0 / static_cast<double>(p) * first * static_cast<double>(alpha) -
                        4.0 * static_cast<double>(m) / static_cast<double>(p) * second;
  return checked("rho_F", exact, approx);
}

Defects defect_terms(const GroupAction& action) {
  require_prime(action.p);
  Defects out;
  out.d_chi = (action.p - 1) * static_cast<std::int64_t>(action.points.size() + 2 * action.spheres.size());
  for (std::int64_t k = 1; k < action.p; ++k) out.d_sigma += gsignature_value(action, k);
  return out;
}

QuotientInvariants quotient_invariants(const GroupAction& action) {
  const Defects d = defect_terms(action);
  return {Rational(action.euler + d.d_chi, action.p), (Rational(action.signature) + d.d_sigma) / Rational(action.p)};
}

std::int64_t dim_nonequivariant(std::int64_t k, std::int64_t euler, std::int64_t signature) {
  const std::int64_t s = euler + signature;
  if (s % 2 != 0) throw Error(Errc::parity_error, "chi + Sign = " + std::to_string(s) + " is odd");
  return 8 * k - 3 * (s / 2);
}

std::string format_breakdown(const DimensionReport& report) {
  std::ostringstream os;
  for (const auto& t : report.terms) os << "  " << t.name << " = " << t.value << "\n";
  os << "  chi(X/G) = " << report.quotient.euler << ", Sign(X/G) = " << report.quotient.signature << "\n";
  return os.str();
}

namespace {

DimensionReport finish(DimensionReport report) {
  Rational total;
  for (const auto& t : report.terms) total += t.value;
  if (!total.is_integer()) {
    std::ostringstream os;
    os << "dimension " << total << " is not an integer\n" << format_breakdown(report);
    throw Error(Errc::non_integer_dimension, os.str());
  }
  report.dimension = to_int64(total.numerator());
  return report;
}

Rational quotient_term(const QuotientInvariants& q) { return Rational(-3, 2) * (q.euler + q.signature); }

}  // namespace

DimensionReport dim_invariant_moduli(const GroupAction& action, const Su2Isotropy& input, std::int64_t k) {
  const std::int64_t p = action.p;
  require_prime(p);
  require_matching(action, input);
  if (p == 2 && input.convention != WeightConvention::adjoint) {
    throw Error(Errc::invalid_argument, "p = 2 needs adjoint weights (doubling loses them mod 2)");
  }
  const Su2Isotropy iso = to_convention(input, WeightConvention::adjoint, p);

  DimensionReport report;
  report.quotient = quotient_invariants(action);
  Rational m, rho_l, chi_f, rho_f;
  for (std::size_t i = 0; i < action.points.size(); ++i) {
    const auto& pt = action.points[i];
    const std::int64_t l = iso.ell_points[i];
    if (reduce_mod(l, p) != 0) m += Rational(1);
    rho_l -= rho_lens(p, pt.a, pt.b, l).exact;
  }
  for (std::size_t j = 0; j < action.spheres.size(); ++j) {
    const auto& sp = action.spheres[j];
    const std::int64_t l = iso.ell_spheres[j];
    if (reduce_mod(l, p) != 0) chi_f += Rational(2);
    rho_f += rho_surface(p, sp.c, l, sp.alpha, iso.m_spheres[j]).exact;
  }
  report.terms = {{"8c2/p", Rational(8 * k, p)},
                  {"-(3/2)(chi+Sign)(X/G)", quotient_term(report.quotient)},
                  {"m", m},
                  {"-sum rhoL", rho_l},
                  {"sum chi(F)", chi_f},
                  {"sum rho_F", rho_f}};
  return finish(std::move(report));
}

DimensionReport dim_isolated_only(const GroupAction& action, const Su2Isotropy& iso, std::int64_t k) {
  if (!action.spheres.empty()) throw Error(Errc::has_spheres, "action has fixed spheres");
  DimensionReport report = dim_invariant_moduli(action, iso, k);
  std::erase_if(report.terms, [](const DimensionTerm& t) { return t.name == "sum chi(F)" || t.name == "sum rho_F"; });
  return report;
}

DimensionReport dim_involution(const GroupAction& action, std::int64_t k) {
  if (action.p != 2) throw Error(Errc::not_involution, "group order " + std::to_string(action.p) + " is not 2");
  for (const auto& sp : action.spheres) {
    if (reduce_mod(sp.c, 2) != 1) throw Error(Errc::not_involution, "normal weight must be odd");
  }
  for (const auto& pt : action.points) {
    if (reduce_mod(pt.a, 2) != 1 || reduce_mod(pt.b, 2) != 1) {
      throw Error(Errc::not_involution, "rotation weights must be odd");
    }
  }
  DimensionReport report;
  report.quotient = quotient_invariants(action);
  Rational surfaces;
  for (const auto& sp : action.spheres) surfaces += Rational(2 + sp.alpha);
  report.terms = {{"4c2", Rational(4 * k)},
                  {"-(3/2)(chi+Sign)(X/G)", quotient_term(report.quotient)},
                  {"sum (chi(F) + [F]^2)", surfaces},
                  {"#points", Rational(static_cast<std::int64_t>(action.points.size()))}};
  return finish(std::move(report));
}

}  // namespace eqv
