#include "eqv/action_model.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace eqv {

IsolatedPoint canonical_point(const IsolatedPoint& pt, std::int64_t p) {
  const std::int64_t a = reduce_mod(pt.a, p);
  const std::int64_t b = reduce_mod(pt.b, p);
  const std::int64_t na = reduce_mod(-pt.a, p);
  const std::int64_t nb = reduce_mod(-pt.b, p);
  const std::array<IsolatedPoint, 4> variants{{{a, b}, {b, a}, {na, nb}, {nb, na}}};
  return *std::min_element(variants.begin(), variants.end());
}

GroupAction make_action(std::int64_t p, const std::vector<IsolatedPoint>& points,
                        const std::vector<FixedSphere>& spheres, std::int64_t signature, std::int64_t euler,
                        std::int64_t b2) {
  if (p < 2) throw Error(Errc::invalid_modulus, "group order must be >= 2");
  GroupAction out;
  out.p = p;
  out.signature = signature;
  out.euler = euler;
  out.b2 = b2;
  out.points.reserve(points.size());
  for (const auto& pt : points) out.points.push_back(canonical_point(pt, p));
  out.spheres.reserve(spheres.size());
  for (const auto& sp : spheres) out.spheres.push_back({reduce_mod(sp.c, p), sp.alpha});
  return out;
}

GroupAction sorted_action(GroupAction action) {
  std::sort(action.points.begin(), action.points.end());
  std::sort(action.spheres.begin(), action.spheres.end());
  return action;
}

std::int64_t display_residue(std::int64_t r, std::int64_t p) {
  const std::int64_t v = reduce_mod(r, p);
  return 2 * v > p ? v - p : v;
}

std::string format_point(const IsolatedPoint& pt, std::int64_t p) {
  std::ostringstream os;
  os << "(" << display_residue(pt.a, p) << ", " << display_residue(pt.b, p) << ")";
  return os.str();
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport validate(const GroupAction& action) {
  ValidationReport report;
  const std::int64_t p = action.p;

  const bool prime = is_prime(p);
  report.moduli_only = prime && p == 2;
  report.checks.push_back({"prime order", prime,
                           prime ? (p == 2 ? "p = 2 (moduli computations only)" : "p = " + std::to_string(p))
                                 : std::to_string(p) + " is not prime"});

  std::string zero_detail;
  if (p >= 2) {
    for (std::size_t i = 0; i < action.points.size(); ++i) {
      const auto& pt = action.points[i];
      if (reduce_mod(pt.a, p) == 0 || reduce_mod(pt.b, p) == 0) {
        zero_detail += "point " + std::to_string(i) + " ";
      }
    }
    for (std::size_t j = 0; j < action.spheres.size(); ++j) {
      if (reduce_mod(action.spheres[j].c, p) == 0) zero_detail += "sphere " + std::to_string(j) + " ";
    }
  }
  report.checks.push_back({"nonzero rotation", zero_detail.empty(),
                           zero_detail.empty() ? "all rotation numbers are units" : "zero rotation at " + zero_detail});

  const auto fixed_euler = static_cast<std::int64_t>(action.points.size() + 2 * action.spheres.size());
  report.checks.push_back({"lefschetz count", fixed_euler == action.b2 + 2,
                           "|points| + 2|spheres| = " + std::to_string(fixed_euler) +
                               ", b2 + 2 = " + std::to_string(action.b2 + 2)});

  report.checks.push_back({"euler characteristic", action.euler == action.b2 + 2,
                           "chi = " + std::to_string(action.euler) + ", b2 + 2 = " + std::to_string(action.b2 + 2)});

  const bool sign_ok = action.b2 >= 0 && std::abs(action.signature) <= action.b2 &&
                       reduce_mod(action.signature - action.b2, 2) == 0;
  report.checks.push_back({"signature range", sign_ok,
                           "Sign = " + std::to_string(action.signature) + ", b2 = " + std::to_string(action.b2)});
  return report;
}

void require_valid(const GroupAction& action) {
  const ValidationReport report = validate(action);
  if (report.passed()) return;
  std::string failed;
  for (const auto& c : report.checks) {
    if (!c.passed) failed += c.name + " (" + c.detail + "); ";
  }
  throw Error(Errc::invalid_action, failed);
}

PartialLineIsotropy to_partial(const LineIsotropy& iso) {
  PartialLineIsotropy out;
  for (auto v : iso.lambda_points) out.lambda_points.emplace_back(v);
  for (auto v : iso.lambda_spheres) out.lambda_spheres.emplace_back(v);
  for (auto v : iso.m_spheres) out.m_spheres.emplace_back(v);
  out.c1_squared = iso.c1_squared;
  return out;
}

namespace {

void require_lengths(const GroupAction& action, std::size_t points, std::size_t spheres, std::size_t ms) {
  if (points != action.points.size() || spheres != action.spheres.size() || ms != action.spheres.size()) {
    throw Error(Errc::length_mismatch, "isotropy lengths (" + std::to_string(points) + ", " +
                                           std::to_string(spheres) + ", " + std::to_string(ms) +
                                           ") do not match " + std::to_string(action.points.size()) +
                                           " points and " + std::to_string(action.spheres.size()) + " spheres");
  }
}

void require_weights(bool ok, const std::string& detail) {
  if (!ok) throw Error(Errc::bad_weights, detail);
}

}  // namespace

void require_matching(const GroupAction& action, const LineIsotropy& iso) {
  require_lengths(action, iso.lambda_points.size(), iso.lambda_spheres.size(), iso.m_spheres.size());
}

void require_matching(const GroupAction& action, const PartialLineIsotropy& iso) {
  require_lengths(action, iso.lambda_points.size(), iso.lambda_spheres.size(), iso.m_spheres.size());
}

void require_matching(const GroupAction& action, const Su2Isotropy& iso) {
  require_lengths(action, iso.ell_points.size(), iso.ell_spheres.size(), iso.m_spheres.size());
}

Su2Isotropy canonical_su2(const Su2Isotropy& iso, std::int64_t p) {
  Su2Isotropy out = iso;
  for (auto& l : out.ell_points) {
    l = reduce_mod(l, p);
    if (2 * l > p) l = p - l;
  }
  for (std::size_t j = 0; j < out.ell_spheres.size(); ++j) {
    auto& l = out.ell_spheres[j];
    l = reduce_mod(l, p);
    if (2 * l > p) {
      l = p - l;
      out.m_spheres[j] = -out.m_spheres[j];
    }
  }
  return out;
}

Su2Isotropy to_convention(const Su2Isotropy& iso, WeightConvention target, std::int64_t p) {
  if (iso.convention == target) return iso;
  Su2Isotropy out = iso;
  out.convention = target;
  std::int64_t factor = 2;
  if (target == WeightConvention::bundle) {
    if (p == 2) throw Error(Errc::invalid_argument, "adjoint weights cannot be halved for p = 2");
    factor = mod_inverse(2, p).value();
  }
  for (auto& l : out.ell_points) l = reduce_mod(static_cast<std::int64_t>(static_cast<__int128>(l) * factor % p), p);
  for (auto& l : out.ell_spheres) l = reduce_mod(static_cast<std::int64_t>(static_cast<__int128>(l) * factor % p), p);
  return out;
}

GroupAction linear_cp2(std::int64_t p, std::int64_t a, std::int64_t b) {
  require_weights(is_prime(p), "p must be prime");
  require_weights(0 < a && a < p && 0 <= b && b < p && a != b,
                  "linear CP^2 needs 0 < a < p, 0 <= b < p, a != b; got (" + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
  if (b == 0) return make_action(p, {{a, a}}, {{a, 1}}, 1, 3, 1);
  return make_action(p, {{a, b}, {b - a, -a}, {a - b, -b}}, {}, 1, 3, 1);
}

GroupAction linear_cp2_bar(std::int64_t p, std::int64_t a) {
  require_weights(is_prime(p), "p must be prime");
  require_weights(0 < a && a < p, "linear CP^2-bar needs 0 < a < p");
  return make_action(p, {{a, -a}}, {{a, -1}}, -1, 3, 1);
}

GroupAction linear_s4(std::int64_t p, std::int64_t a, std::int64_t b) {
  require_weights(is_prime(p), "p must be prime");
  require_weights(0 < a && a < p && 0 < b && b < p, "linear S^4 needs 0 < a, b < p");
  return make_action(p, {{a, b}, {a, -b}}, {}, 0, 2, 0);
}

GroupAction reverse_orientation(const GroupAction& action) {
  std::vector<IsolatedPoint> points;
  for (const auto& pt : action.points) points.push_back({pt.a, -pt.b});
  std::vector<FixedSphere> spheres;
  for (const auto& sp : action.spheres) spheres.push_back({sp.c, -sp.alpha});
  return make_action(action.p, points, spheres, -action.signature, action.euler, action.b2);
}

GroupAction connected_sum_points(const GroupAction& a, std::size_t i, const GroupAction& b, std::size_t j) {
  if (a.p != b.p) throw Error(Errc::incompatible_points, "different group orders");
  if (i >= a.points.size() || j >= b.points.size()) throw Error(Errc::incompatible_points, "point index out of range");
  const std::int64_t p = a.p;
  const IsolatedPoint reversed = canonical_point({b.points[j].a, -b.points[j].b}, p);
  if (reversed != canonical_point(a.points[i], p)) {
    throw Error(Errc::incompatible_points, "tangent data " + format_point(a.points[i], p) + " and " +
                                               format_point(b.points[j], p) + " do not match after reversal");
  }
  GroupAction out;
  out.p = p;
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    if (k != i) out.points.push_back(a.points[k]);
  }
  for (std::size_t k = 0; k < b.points.size(); ++k) {
    if (k != j) out.points.push_back(b.points[k]);
  }
  out.spheres = a.spheres;
  out.spheres.insert(out.spheres.end(), b.spheres.begin(), b.spheres.end());
  out.signature = a.signature + b.signature;
  out.euler = a.euler + b.euler - 2;
  out.b2 = a.b2 + b.b2;
  return out;
}

GroupAction connected_sum_spheres(const GroupAction& a, std::size_t i, const GroupAction& b, std::size_t j) {
  if (a.p != b.p) throw Error(Errc::incompatible_spheres, "different group orders");
  if (i >= a.spheres.size() || j >= b.spheres.size()) {
    throw Error(Errc::incompatible_spheres, "sphere index out of range");
  }
  const std::int64_t p = a.p;
  if (reduce_mod(a.spheres[i].c + b.spheres[j].c, p) != 0) {
    throw Error(Errc::incompatible_spheres, "normal rotations " + std::to_string(a.spheres[i].c) + " and " +
                                                std::to_string(b.spheres[j].c) + " are not opposite mod " +
                                                std::to_string(p));
  }
  GroupAction out;
  out.p = p;
  out.points = a.points;
  out.points.insert(out.points.end(), b.points.begin(), b.points.end());
  out.spheres = a.spheres;
  out.spheres[i].alpha += b.spheres[j].alpha;
  for (std::size_t k = 0; k < b.spheres.size(); ++k) {
    if (k != j) out.spheres.push_back(b.spheres[k]);
  }
  out.signature = a.signature + b.signature;
  out.euler = a.euler + b.euler - 2;
  out.b2 = a.b2 + b.b2;
  return out;
}

LineIsotropy extend_isotropy_for_sphere_sum(const LineIsotropy& iso, std::size_t sphere) {
  if (sphere >= iso.lambda_spheres.size()) throw Error(Errc::invalid_argument, "sphere index out of range");
  LineIsotropy out = iso;
  out.lambda_points.push_back(iso.lambda_spheres[sphere]);
  return out;
}

GroupAction example_8_1_action() {
  constexpr std::int64_t p = 5;
  // Two CP^2-bar copies glued along their fixed lines (c = 1 and c = 4 = -1).
  const GroupAction pair = connected_sum_spheres(linear_cp2_bar(p, 1), 0, linear_cp2_bar(p, 4), 0);
  // Three-point CP^2-bar: data (1,1), (2,-1), (2,-1).
  const GroupAction three = reverse_orientation(linear_cp2(p, 2, 1));
  const IsolatedPoint target = canonical_point({1, 1}, p);
  std::size_t j = 0;
  while (three.points[j] != target) ++j;
  GroupAction out = connected_sum_points(pair, 0, three, j);

  const GroupAction literal = make_action(p, {{1, -1}, {2, -1}, {2, -1}}, {{1, -2}}, -3, 5, 3);
  if (sorted_action(out) != sorted_action(literal)) {
    throw Error(Errc::invalid_action, "connected-sum construction disagrees with the literal example data");
  }
  return out;
}

}  // namespace eqv
