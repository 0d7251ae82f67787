#include "eqv/congruence.hpp"

#include <algorithm>

#include "eqv/cyclotomic.hpp"

namespace eqv {

namespace {

// Arithmetic in Z/p on least non-negative representatives.
struct Zp {
  std::int64_t p;

  std::int64_t r(std::int64_t x) const { return reduce_mod(x, p); }
  std::int64_t add(std::int64_t x, std::int64_t y) const { return r(x + y); }
  std::int64_t sub(std::int64_t x, std::int64_t y) const { return r(x - y); }
  std::int64_t mul(std::int64_t x, std::int64_t y) const {
    return static_cast<std::int64_t>(static_cast<__int128>(r(x)) * r(y) % p);
  }
  std::int64_t inv(std::int64_t x) const { return mod_inverse(x, p).value(); }
  std::int64_t div(std::int64_t x, std::int64_t y) const { return mul(x, inv(y)); }
  std::int64_t pow(std::int64_t x, int e) const {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) out = mul(out, x);
    return out;
  }
};

// Truncated power series in s over Z/p, orders 0..n with n <= p - 2 so that
// every factorial used is a unit.
using ModSeries = std::vector<std::int64_t>;

ModSeries ms_mul(const Zp& z, const ModSeries& x, const ModSeries& y) {
  ModSeries out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] = z.add(out[i + j], z.mul(x[i], y[j]));
  }
  return out;
}

ModSeries ms_add(const Zp& z, ModSeries x, const ModSeries& y, std::int64_t scale = 1) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = z.add(x[i], z.mul(scale, y[i]));
  return x;
}

ModSeries ms_inv(const Zp& z, const ModSeries& x) {
  ModSeries out(x.size(), 0);
  const std::int64_t c0 = z.inv(x[0]);
  out[0] = c0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc = z.add(acc, z.mul(x[j], out[i - j]));
    out[i] = z.mul(z.sub(0, acc), c0);
  }
  return out;
}

// Coefficients C(e, 0..n) mod p; n < p.
ModSeries binomials(const Zp& z, std::int64_t e, std::size_t n) {
  ModSeries out(n + 1, 0);
  out[0] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    out[j] = z.div(z.mul(out[j - 1], e - static_cast<std::int64_t>(j) + 1), static_cast<std::int64_t>(j));
  }
  return out;
}

struct ModExpander {
  Zp z;
  std::size_t order;

  ModSeries power(std::int64_t e) const { return binomials(z, z.r(e), order); }

  // (t^c - 1)/(t - 1)
  ModSeries root_unit(std::int64_t c) const {
    const ModSeries b = binomials(z, z.r(c), order + 1);
    return ModSeries(b.begin() + 1, b.end());
  }

  ModSeries half_cot(std::int64_t c) const {
    ModSeries num = power(c);
    num[0] = z.add(num[0], 1);
    return ms_mul(z, num, ms_inv(z, root_unit(c)));
  }

  ModSeries point(std::int64_t a, std::int64_t b, std::int64_t lambda) const {
    return ms_mul(z, ms_mul(z, half_cot(a), half_cot(b)), power(lambda));
  }

  ModSeries sphere(std::int64_t c, std::int64_t alpha, std::int64_t lambda) const {
    const ModSeries inv = ms_inv(z, root_unit(c));
    ModSeries out = ms_mul(z, ms_mul(z, ms_mul(z, power(c), inv), inv), power(lambda));
    return ms_add(z, ModSeries(order + 1, 0), out, z.mul(-4, alpha));
  }

  ModSeries boundary(std::int64_t c, std::int64_t m, std::int64_t lambda) const {
    ModSeries shifted(order + 1, 0);
    const ModSeries h = ms_mul(z, half_cot(c), power(lambda));
    for (std::size_t i = 0; i < order; ++i) shifted[i + 1] = h[i];
    return ms_add(z, ModSeries(order + 1, 0), shifted, z.mul(2, m));
  }
};

RelationResult residue_relation(const std::string& name, std::int64_t lhs, std::int64_t required, std::int64_t p) {
  const std::int64_t l = reduce_mod(lhs, p);
  const std::int64_t r = reduce_mod(required, p);
  return {name, Rational(l), Rational(r), p, l == r};
}

void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw Error(Errc::invalid_modulus, "congruence checks need an odd prime, got " + std::to_string(p));
  }
}

void add_series_checks(CongruenceReport& report, const ModSeries& total, std::int64_t p,
                       const std::vector<std::int64_t>& required) {
  for (std::size_t j = 0; j < required.size() && j < total.size(); ++j) {
    report.relations.push_back(residue_relation("series s^" + std::to_string(j), total[j], required[j], p));
  }
}

std::int64_t point_weight(const Zp& z, const IsolatedPoint& pt) { return z.inv(z.mul(pt.a, pt.b)); }

std::int64_t sphere_weight(const Zp& z, const FixedSphere& sp) { return z.div(sp.alpha, z.mul(sp.c, sp.c)); }

}  // namespace

bool CongruenceReport::passed() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.passed; });
}

std::string CongruenceReport::failures() const {
  std::string out;
  for (const auto& r : relations) {
    if (r.passed) continue;
    if (!out.empty()) out += ", ";
    out += r.name;
  }
  return out;
}

Rational gsignature_value(const GroupAction& action, std::int64_t k) {
  const int p = static_cast<int>(action.p);
  CycloNum acc(p);
  for (const auto& pt : action.points) acc += eval_point_term(p, k, pt.a, pt.b);
  for (const auto& sp : action.spheres) acc += eval_sphere_term(p, k, sp.c, make_integer(sp.alpha));
  return acc.rational_value();
}

CongruenceReport gsignature_check(const GroupAction& action) {
  require_odd_prime(action.p);
  CongruenceReport report;
  const Rational sign(action.signature);
  for (std::int64_t k = 1; k < action.p; ++k) {
    const std::string name = "Sign(t^" + std::to_string(k) + ")";
    try {
      const Rational v = gsignature_value(action, k);
      report.relations.push_back({name, v, sign, 0, v == sign});
    } catch (const Error& e) {
      if (e.code() != Errc::not_rational) throw;
      report.relations.push_back({name + " not rational", Rational(), sign, 0, false});
    }
  }
  return report;
}

CongruenceReport check_rotation_relations(const GroupAction& action) {
  const std::int64_t p = action.p;
  require_odd_prime(p);
  const Zp z{p};
  std::int64_t r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  for (const auto& pt : action.points) {
    const std::int64_t a2 = z.mul(pt.a, pt.a);
    const std::int64_t b2 = z.mul(pt.b, pt.b);
    const std::int64_t w = point_weight(z, pt);
    r1 = z.add(r1, w);
    r2 = z.add(r2, z.mul(z.add(a2, b2), w));
    r3 = z.add(r3, z.mul(z.sub(z.add(z.mul(a2, a2), z.mul(b2, b2)), z.mul(5, z.mul(a2, b2))), w));
    const std::int64_t sextic = z.sub(z.add(z.mul(2, z.pow(a2, 3)), z.mul(2, z.pow(b2, 3))),
                                      z.mul(7, z.add(z.mul(z.mul(a2, a2), b2), z.mul(a2, z.mul(b2, b2)))));
    r4 = z.add(r4, z.mul(sextic, w));
  }
  for (const auto& sp : action.spheres) {
    const std::int64_t c2 = z.mul(sp.c, sp.c);
    r1 = z.sub(r1, sphere_weight(z, sp));
    r2 = z.add(r2, z.r(sp.alpha));
    r3 = z.add(r3, z.mul(3, z.mul(sp.alpha, c2)));
    r4 = z.add(r4, z.mul(10, z.mul(sp.alpha, z.mul(c2, c2))));
  }
  CongruenceReport report;
  report.relations.push_back(residue_relation("(1)", r1, 0, p));
  report.relations.push_back(residue_relation("(2)", r2, 3 * action.signature, p));
  report.relations.push_back(residue_relation("(3)", r3, 0, p));
  report.relations.push_back(residue_relation("(4)", r4, 0, p));

  const ModExpander ex{z, static_cast<std::size_t>(p - 2)};
  ModSeries total(ex.order + 1, 0);
  for (const auto& pt : action.points) total = ms_add(z, total, ex.point(pt.a, pt.b, 0));
  for (const auto& sp : action.spheres) total = ms_add(z, total, ex.sphere(sp.c, sp.alpha, 0));
  std::vector<std::int64_t> required(ex.order + 1, 0);
  if (required.size() > 2) required[2] = action.signature;
  add_series_checks(report, total, p, required);
  return report;
}

CongruenceReport theorem_a_condition(const GroupAction& action, const LineIsotropy& iso) {
  require_odd_prime(action.p);
  require_matching(action, iso);
  const Zp z{action.p};
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < action.points.size(); ++i) {
    acc = z.add(acc, z.mul(iso.lambda_points[i], point_weight(z, action.points[i])));
  }
  for (std::size_t j = 0; j < action.spheres.size(); ++j) {
    const auto& sp = action.spheres[j];
    const std::int64_t num = z.sub(z.mul(sp.c, iso.m_spheres[j]), z.mul(iso.lambda_spheres[j], sp.alpha));
    acc = z.add(acc, z.div(num, z.mul(sp.c, sp.c)));
  }
  CongruenceReport report;
  report.relations.push_back(residue_relation("existence", acc, 0, action.p));
  return report;
}

LineIsotropy solve_theorem_a(const GroupAction& action, const PartialLineIsotropy& partial) {
  require_odd_prime(action.p);
  require_matching(action, partial);
  const Zp z{action.p};

  enum class Slot { point, sphere_lambda, sphere_m };
  std::size_t free_count = 0;
  Slot slot = Slot::point;
  std::size_t index = 0;
  auto note_free = [&](const std::optional<std::int64_t>& v, Slot s, std::size_t i) {
    if (v) return;
    ++free_count;
    slot = s;
    index = i;
  };
  for (std::size_t i = 0; i < partial.lambda_points.size(); ++i) note_free(partial.lambda_points[i], Slot::point, i);
  for (std::size_t j = 0; j < partial.lambda_spheres.size(); ++j) {
    note_free(partial.lambda_spheres[j], Slot::sphere_lambda, j);
    note_free(partial.m_spheres[j], Slot::sphere_m, j);
  }
  if (free_count == 0) throw Error(Errc::overdetermined, "no unspecified entry to solve for");
  if (free_count > 1) {
    throw Error(Errc::underdetermined, std::to_string(free_count) + " unspecified entries; exactly one is required");
  }

  // Residual of the existence condition with the free entry set to 0, and its coefficient.
  LineIsotropy out;
  out.c1_squared = partial.c1_squared;
  for (const auto& v : partial.lambda_points) out.lambda_points.push_back(v.value_or(0));
  for (const auto& v : partial.lambda_spheres) out.lambda_spheres.push_back(v.value_or(0));
  for (const auto& v : partial.m_spheres) out.m_spheres.push_back(v.value_or(0));
  const std::int64_t residual = theorem_a_condition(action, out).relations[0].lhs.numerator().get_si();

  std::int64_t coef = 0;
  if (slot == Slot::point) {
    coef = point_weight(z, action.points[index]);
  } else if (slot == Slot::sphere_lambda) {
    coef = z.sub(0, sphere_weight(z, action.spheres[index]));
  } else {
    coef = z.inv(action.spheres[index].c);
  }

  std::int64_t value = 0;
  if (coef == 0) {
    if (residual != 0) {
      throw Error(Errc::not_solvable, "free lambda on sphere " + std::to_string(index) +
                                          " has coefficient 0 mod p (p divides alpha) and the existence condition leaves " +
                                          std::to_string(residual));
    }
  } else {
    value = z.div(z.sub(0, residual), coef);
  }
  if (slot == Slot::point) out.lambda_points[index] = value;
  if (slot == Slot::sphere_lambda) out.lambda_spheres[index] = value;
  if (slot == Slot::sphere_m) out.m_spheres[index] = value;
  return out;
}

CongruenceReport check_line_bundle(const GroupAction& action, const LineIsotropy& iso) {
  require_odd_prime(action.p);
  require_matching(action, iso);
  if (!iso.c1_squared) throw Error(Errc::missing_chern_square, "relation (ii) needs c1(L)^2[X]");
  const std::int64_t p = action.p;
  const Zp z{p};
  std::int64_t r1 = 0, r2 = 0;
  for (std::size_t i = 0; i < action.points.size(); ++i) {
    const std::int64_t w = point_weight(z, action.points[i]);
    const std::int64_t l = iso.lambda_points[i];
    r1 = z.add(r1, z.mul(l, w));
    r2 = z.add(r2, z.mul(z.mul(l, l), w));
  }
  for (std::size_t j = 0; j < action.spheres.size(); ++j) {
    const auto& sp = action.spheres[j];
    const std::int64_t w = sphere_weight(z, sp);
    const std::int64_t l = iso.lambda_spheres[j];
    const std::int64_t m_over_c = z.div(iso.m_spheres[j], sp.c);
    r1 = z.add(z.sub(r1, z.mul(l, w)), m_over_c);
    r2 = z.add(z.sub(r2, z.mul(z.mul(l, l), w)), z.mul(2, z.mul(l, m_over_c)));
  }
  CongruenceReport report;
  report.relations.push_back(residue_relation("(i)", r1, 0, p));
  report.relations.push_back(residue_relation("(ii)", r2, *iso.c1_squared, p));

  const ModExpander ex{z, static_cast<std::size_t>(std::min<std::int64_t>(2, p - 2))};
  ModSeries total(ex.order + 1, 0);
  for (std::size_t i = 0; i < action.points.size(); ++i) {
    const auto& pt = action.points[i];
    total = ms_add(z, total, ex.point(pt.a, pt.b, iso.lambda_points[i]));
  }
  for (std::size_t j = 0; j < action.spheres.size(); ++j) {
    const auto& sp = action.spheres[j];
    total = ms_add(z, total, ex.sphere(sp.c, sp.alpha, iso.lambda_spheres[j]));
    total = ms_add(z, total, ex.boundary(sp.c, iso.m_spheres[j], iso.lambda_spheres[j]));
  }
  add_series_checks(report, total, p, {0, 0, action.signature + 2 * *iso.c1_squared});
  return report;
}

CongruenceReport check_su2(const GroupAction& action, const Su2Isotropy& input) {
  require_odd_prime(action.p);
  require_matching(action, input);
  const std::int64_t p = action.p;
  const Su2Isotropy iso = to_convention(input, WeightConvention::bundle, p);
  const Zp z{p};
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < action.points.size(); ++i) {
    const std::int64_t l = iso.ell_points[i];
    acc = z.add(acc, z.mul(z.mul(l, l), point_weight(z, action.points[i])));
  }
  for (std::size_t j = 0; j < action.spheres.size(); ++j) {
    const auto& sp = action.spheres[j];
    const std::int64_t l = iso.ell_spheres[j];
    acc = z.sub(acc, z.mul(z.mul(l, l), sphere_weight(z, sp)));
    acc = z.add(acc, z.mul(2, z.mul(z.div(l, sp.c), iso.m_spheres[j])));
  }
  CongruenceReport report;
  report.relations.push_back(residue_relation("SU(2)", acc, -iso.c2, p));

  const ModExpander ex{z, static_cast<std::size_t>(std::min<std::int64_t>(2, p - 2))};
  ModSeries total(ex.order + 1, 0);
  for (std::size_t i = 0; i < action.points.size(); ++i) {
    const auto& pt = action.points[i];
    const std::int64_t l = iso.ell_points[i];
    total = ms_add(z, total, ex.point(pt.a, pt.b, l));
    total = ms_add(z, total, ex.point(pt.a, pt.b, -l));
  }
  for (std::size_t j = 0; j < action.spheres.size(); ++j) {
    const auto& sp = action.spheres[j];
    const std::int64_t l = iso.ell_spheres[j];
    const std::int64_t m = iso.m_spheres[j];
    total = ms_add(z, total, ex.sphere(sp.c, sp.alpha, l));
    total = ms_add(z, total, ex.sphere(sp.c, sp.alpha, -l));
    total = ms_add(z, total, ex.boundary(sp.c, m, l));
    total = ms_add(z, total, ex.boundary(sp.c, m, -l), -1);
  }
  add_series_checks(report, total, p, {0, 0, 2 * action.signature - 4 * iso.c2});
  return report;
}

Rational linking_form(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 2) throw Error(Errc::invalid_modulus, "lens space order must be >= 2");
  if (gcd(a, n) != 1 || gcd(b, n) != 1) throw Error(Errc::not_coprime, "weights must be prime to " + std::to_string(n));
  const Zp z{n};
  return Rational(z.mul(a, b), n);
}

Residue flat_chern_class(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t lambda) {
  if (n < 2) throw Error(Errc::invalid_modulus, "lens space order must be >= 2");
  if (gcd(a, n) != 1 || gcd(b, n) != 1) throw Error(Errc::not_coprime, "ab must be prime to " + std::to_string(n));
  return Residue(lambda, n) * mod_inverse(Zp{n}.mul(a, b), n);
}

BoundaryChern boundary_chern_data(const FixedSphere& sphere, std::int64_t lambda, std::int64_t m, std::int64_t p) {
  if (sphere.alpha == 0) throw Error(Errc::zero_self_intersection, "fixed sphere with [F]^2 = 0");
  if (!is_prime(p)) throw Error(Errc::invalid_modulus, "p must be prime");
  std::int64_t abar = sphere.alpha < 0 ? -sphere.alpha : sphere.alpha;
  std::int64_t ppow = p;  // p^{e+1}
  while (abar % p == 0) {
    abar /= p;
    ppow *= p;
  }
  const Integer first = -make_integer(lambda) * make_integer(sphere.alpha);
  const Integer second = make_integer(sphere.c) * make_integer(m);
  const Residue ell = crt_solve(first, ppow, second, abar);
  return {ell, Rational(make_integer(ell.value()), Integer(make_integer(sphere.c) * make_integer(sphere.c)))};
}

}  // namespace eqv
