#ifndef EQV_MODULI_HPP
#define EQV_MODULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eqv/action_model.hpp"
#include "eqv/exact_arith.hpp"

namespace eqv {

/// Exact value with its independent floating-point evaluation.
struct RhoValue {
  Rational exact;
  double float_check = 0.0;
};

/// rhoL(p,a,b,l) = (2/p) sum_k cot(pi k a/p) cot(pi k b/p) sin^2(pi k l/p).
/// Throws RhoMismatch if the exact and float values differ by more than 1e-9.
RhoValue rho_lens(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t ell);

/// rho_F(l) = (2/p) sum_k csc^2(pi c k/p) sin^2(pi k l/p) alpha
///          - (4m/p) sum_k sin(2 pi k l/p) cot(pi k c/p).
RhoValue rho_surface(std::int64_t p, std::int64_t c, std::int64_t ell, std::int64_t alpha, std::int64_t m);

struct Defects {
  std::int64_t d_chi = 0;
  Rational d_sigma;
};

/// d_chi = (p-1)(#points + 2 #spheres), d_sigma = sum_k Sign(t^k, X).
Defects defect_terms(const GroupAction& action);

struct QuotientInvariants {
  Rational euler;
  Rational signature;
  bool integral() const { return euler.is_integer() && signature.is_integer(); }
};

QuotientInvariants quotient_invariants(const GroupAction& action);

/// 8k - (3/2)(chi + Sign); ParityError when chi + Sign is odd.
std::int64_t dim_nonequivariant(std::int64_t k, std::int64_t euler, std::int64_t signature);

struct DimensionTerm {
  std::string name;
  Rational value;
};

struct DimensionReport {
  std::int64_t dimension = 0;
  /// Signed contributions; they sum to `dimension`.
  std::vector<DimensionTerm> terms;
  QuotientInvariants quotient;
};

/// dim M^G_k = 8k/p - (3/2)(chi+Sign)(X/G) + m - sum rhoL + sum_{l_j != 0} chi(F_j) + sum rho_F.
/// Weights enter in the adjoint convention; bundle weights are doubled.
/// p = 2 requires adjoint weights. NonIntegerDimension carries the breakdown.
DimensionReport dim_invariant_moduli(const GroupAction& action, const Su2Isotropy& iso, std::int64_t k);

/// Sphere-free special case; HasSpheres otherwise.
DimensionReport dim_isolated_only(const GroupAction& action, const Su2Isotropy& iso, std::int64_t k);

/// Involution with c_F = l = 1 (mod 2) everywhere:
/// 4k - (3/2)(chi+Sign)(X/G) + sum_F (chi(F) + [F]^2) + #points.
DimensionReport dim_involution(const GroupAction& action, std::int64_t k);

std::string format_breakdown(const DimensionReport& report);

}  // namespace eqv

#endif  // EQV_MODULI_HPP
