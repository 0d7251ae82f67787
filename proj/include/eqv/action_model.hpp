#ifndef EQV_ACTION_MODEL_HPP
#define EQV_ACTION_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqv/exact_arith.hpp"

namespace eqv {

/// Tangential rotation numbers (a, b) at an isolated fixed point.
struct IsolatedPoint {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend auto operator<=>(const IsolatedPoint&, const IsolatedPoint&) = default;
};

/// Fixed 2-sphere: normal rotation c and self-intersection alpha = [F].[F].
struct FixedSphere {
  std::int64_t c = 0;
  std::int64_t alpha = 0;
  friend auto operator<=>(const FixedSphere&, const FixedSphere&) = default;
};

/// Closed simply connected 4-manifold with a homologically trivial Z/p
/// action, described by its fixed-point rotation data.
///
/// Rotation residues are stored in [0, p); isolated points are kept in the
/// canonical representative of {(a,b), (b,a), (-a,-b), (-b,-a)}. Point and
/// sphere order is construction order (isotropy data is aligned with it).
struct GroupAction {
  std::int64_t p = 0;
  std::vector<IsolatedPoint> points;
  std::vector<FixedSphere> spheres;
  std::int64_t signature = 0;
  std::int64_t euler = 0;
  std::int64_t b2 = 0;
  friend bool operator==(const GroupAction&, const GroupAction&) = default;
};

/// Smallest representative of the point's class under order swap and
/// simultaneous sign change, residues in [0, p).
IsolatedPoint canonical_point(const IsolatedPoint& pt, std::int64_t p);

/// Builds an action, reducing rotation numbers mod p and canonicalizing
/// points. Does not validate.
GroupAction make_action(std::int64_t p, const std::vector<IsolatedPoint>& points,
                        const std::vector<FixedSphere>& spheres, std::int64_t signature, std::int64_t euler,
                        std::int64_t b2);

/// Canonical multiset form: points and spheres sorted. For comparisons and
/// deduplication; breaks alignment with isotropy data.
GroupAction sorted_action(GroupAction action);

/// Residue shown in (-p/2, p/2].
std::int64_t display_residue(std::int64_t r, std::int64_t p);
std::string format_point(const IsolatedPoint& pt, std::int64_t p);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  /// p = 2: admissible for the moduli computations only.
  bool moduli_only = false;
  bool passed() const;
};

ValidationReport validate(const GroupAction& action);
/// Throws InvalidAction listing the failed checks.
void require_valid(const GroupAction& action);

/// Isotropy data of an equivariant line bundle: lambda per point and sphere,
/// m_j = c1(L)[F_j], and optionally c1(L)^2[X].
struct LineIsotropy {
  std::vector<std::int64_t> lambda_points;
  std::vector<std::int64_t> lambda_spheres;
  std::vector<std::int64_t> m_spheres;
  std::optional<std::int64_t> c1_squared;
  friend bool operator==(const LineIsotropy&, const LineIsotropy&) = default;
};

/// Line isotropy with possibly unspecified entries, for the existence-condition solver.
struct PartialLineIsotropy {
  std::vector<std::optional<std::int64_t>> lambda_points;
  std::vector<std::optional<std::int64_t>> lambda_spheres;
  std::vector<std::optional<std::int64_t>> m_spheres;
  std::optional<std::int64_t> c1_squared;
};

PartialLineIsotropy to_partial(const LineIsotropy& iso);

/// How SU(2) fibre weights are expressed. `bundle`: E|x = t^l + t^-l, as in
/// the SU(2) congruence. `adjoint`: the weight of L^2 in ad E = L^2 + R + L^-2,
/// i.e. twice the bundle weight, as in the invariant-moduli dimension formula.
enum class WeightConvention { bundle, adjoint };

/// Isotropy data of an equivariant SU(2) bundle with local reductions
/// E|F_j = L_j + L_j^{-1}, m_j = c1(L_j)[F_j], and c2 = c2(E)[X].
struct Su2Isotropy {
  WeightConvention convention = WeightConvention::bundle;
  std::vector<std::int64_t> ell_points;
  std::vector<std::int64_t> ell_spheres;
  std::vector<std::int64_t> m_spheres;
  std::int64_t c2 = 0;
  friend bool operator==(const Su2Isotropy&, const Su2Isotropy&) = default;
};

/// ell ~ -ell with representatives in [0, (p-1)/2]; negating a sphere's ell
/// also negates its m (swaps L and L^{-1}).
Su2Isotropy canonical_su2(const Su2Isotropy& iso, std::int64_t p);
/// Bundle -> adjoint doubles the weights; adjoint -> bundle halves them mod p
/// (p odd only).
Su2Isotropy to_convention(const Su2Isotropy& iso, WeightConvention target, std::int64_t p);

void require_matching(const GroupAction& action, const LineIsotropy& iso);
void require_matching(const GroupAction& action, const PartialLineIsotropy& iso);
void require_matching(const GroupAction& action, const Su2Isotropy& iso);

// Linear models.

/// t[z1:z2:z3] = [zeta^a z1 : zeta^b z2 : z3] on CP^2; b = 0 gives the
/// fixed-line model.
GroupAction linear_cp2(std::int64_t p, std::int64_t a, std::int64_t b);
/// CP^2-bar with one point (a, -a) and a fixed line (c = a, alpha = -1).
GroupAction linear_cp2_bar(std::int64_t p, std::int64_t a);
/// S^4 with fixed points (a, b) and (a, -b).
GroupAction linear_s4(std::int64_t p, std::int64_t a, std::int64_t b);

/// Same action on the oppositely oriented manifold: (a,b) -> (a,-b),
/// alpha -> -alpha, Sign -> -Sign.
GroupAction reverse_orientation(const GroupAction& action);

/// Equivariant connected sum at isolated points: point j of B must be
/// point i of A with reversed orientation, (a_j, -b_j) ~ (a_i, b_i).
/// Result lists A's remaining points then B's.
GroupAction connected_sum_points(const GroupAction& a, std::size_t i, const GroupAction& b, std::size_t j);

/// Equivariant connected sum at points of fixed spheres; requires
/// c_B = -c_A (mod p). The merged sphere keeps A's index with
/// c = c_A and alpha = alpha_A + alpha_B; B's remaining spheres follow.
GroupAction connected_sum_spheres(const GroupAction& a, std::size_t i, const GroupAction& b, std::size_t j);

/// Isotropy on connected_sum_spheres(action, sphere, linear_cp2(p, -c, 0), 0):
/// the new point gets lambda_j of the sphere, everything else is unchanged.
LineIsotropy extend_isotropy_for_sphere_sum(const LineIsotropy& iso, std::size_t sphere);

/// #3 CP^2-bar with the Z/5 action of the worked dimension example, built
/// by connected sums of linear models and checked against the literal data.
GroupAction example_8_1_action();

}  // namespace eqv

#endif  // EQV_ACTION_MODEL_HPP
