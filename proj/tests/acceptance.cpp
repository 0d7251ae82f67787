// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "eqv/congruence.hpp"
#include "eqv/moduli.hpp"
#include "eqv/series.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace eqv;

namespace {

constexpr double kFloatTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

const RelationResult* find(const CongruenceReport& r, const std::string& name) {
  for (const auto& x : r.relations) {
    if (x.name == name) return &x;
  }
  return nullptr;
}

std::vector<std::int64_t> primes_upto(std::int64_t n, std::int64_t from = 3) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = from; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

void criterion1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const GroupAction x = example_8_1_action();
  o.require(x.points[1] == canonical_point({2, -1}, 5), "point order");
  const Su2Isotropy one{WeightConvention::adjoint, {1, -3, 1}, {1}, {0}, 1};
  const Su2Isotropy three{WeightConvention::adjoint, {1, 1, 1}, {1}, {-1}, 1};
  const std::int64_t d1 = dim_invariant_moduli(x, one, 1).dimension;
  const std::int64_t d3 = dim_invariant_moduli(x, three, 1).dimension;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(d1 == 1, "first stratum " + std::to_string(d1));
  o.require(d3 == 3, "second stratum " + std::to_string(d3));
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
}

void criterion2(Outcome& o) {
  struct Lens {
    std::int64_t a, b, l;
    Rational v;
  };
  for (const Lens& c : {Lens{1, -1, 1, Rational(-3, 5)}, Lens{2, -1, 1, Rational(1, 5)}, Lens{2, -1, -3, Rational(-1, 5)}}) {
    const Rational r = rho_lens(5, c.a, c.b, c.l).exact;
    o.require(r == c.v, "rhoL(5," + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.l) + ") = " + r.str());
    o.require(std::abs(oracle::rho_lens(5, c.a, c.b, c.l) - c.v.to_double()) < kFloatTol, "rhoL float oracle");
  }
  struct Surf {
    std::int64_t c, l, alpha, m;
    Rational v;
  };
  for (const Surf& s : {Surf{1, 1, -2, 0, Rational(-16, 5)}, Surf{1, 1, -2, -1, Rational(-4, 5)}}) {
    const Rational r = rho_surface(5, s.c, s.l, s.alpha, s.m).exact;
    o.require(r == s.v, "rhoF = " + r.str());
    o.require(std::abs(oracle::rho_surface(5, s.c, s.l, s.alpha, s.m) - s.v.to_double()) < kFloatTol, "rhoF float oracle");
  }
}

void criterion3(Outcome& o) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    std::vector<GroupAction> xs = gen::linear_models(p);
    for (int n = 0; n < 40; ++n) xs.push_back(gen::random_sum(p, static_cast<int>(oracle::uniform(2, 5))));
    for (const auto& x : xs) {
      for (std::int64_t k = 1; k < p; ++k) {
        o.require(gsignature_value(x, k) == Rational(x.signature), "p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
    }
  }
}

void criterion4(Outcome& o) {
  for (std::int64_t p : primes_upto(97)) {
    std::vector<GroupAction> xs;
    if (p <= 31) {
      xs = gen::linear_models(p);
    } else {
      for (int n = 0; n < 24; ++n) xs.push_back(gen::random_linear(p));
      xs.push_back(linear_cp2(p, 1, 2));
      xs.push_back(linear_cp2(p, p - 1, 0));
      xs.push_back(linear_s4(p, 1, p - 1));
    }
    for (const auto& x : xs) {
      const CongruenceReport r = check_rotation_relations(x);
      o.require(r.passed(), "p=" + std::to_string(p) + ": " + r.failures());
      o.require(find(r, "(4)") != nullptr && find(r, "series s^" + std::to_string(p - 2)) != nullptr,
                "missing relation at p=" + std::to_string(p));
    }
  }
  const std::vector<IsolatedPoint> base{{1, 2}, {1, -1}, {-1, -2}};
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (int coord = 0; coord < 2; ++coord) {
      for (int delta : {-1, 1}) {
        std::vector<IsolatedPoint> pts = base;
        (coord == 0 ? pts[i].a : pts[i].b) += delta;
        if (reduce_mod(pts[i].a, 5) == 0 || reduce_mod(pts[i].b, 5) == 0) continue;
        o.require(!check_rotation_relations(make_action(5, pts, {}, 1, 3, 1)).passed(), "perturbation passed");
      }
    }
  }
}

void criterion5(Outcome& o) {
  for (std::int64_t p : primes_upto(50, 5)) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        if (a == b) continue;
        const LineIsotropy k{{0, a, b}, {}, {}, 1};
        const CongruenceReport r = check_line_bundle(linear_cp2(p, a, b), k);
        const RelationResult* i = find(r, "(i)");
        const RelationResult* ii = find(r, "(ii)");
        o.require(i && ii && i->lhs == Rational(0) && ii->lhs == Rational(1) && r.passed(),
                  "p=" + std::to_string(p) + " (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      o.require(check_line_bundle(linear_cp2(p, a, 0), LineIsotropy{{3}, {3 - a}, {-1}, 1}).passed(),
                "fixed line p=" + std::to_string(p));
    }
  }
}

void criterion6(Outcome& o) {
  for (std::int64_t p : primes_upto(50, 5)) {
    const std::int64_t half = mod_inverse(2, p).value();
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        const Su2Isotropy iso{WeightConvention::bundle,
                              {reduce_mod((b - a) * half, p), reduce_mod((a + b) * half, p)}, {}, {}, 1};
        const CongruenceReport r = check_su2(linear_s4(p, a, b), iso);
        const RelationResult* s = find(r, "SU(2)");
        o.require(r.passed() && s && rational_mod(s->lhs, p).value() == p - 1, "S4 p=" + std::to_string(p));
      }
      const std::int64_t ah = reduce_mod(a * half, p);
      o.require(check_su2(linear_cp2_bar(p, a), Su2Isotropy{WeightConvention::bundle, {a}, {0}, {0}, 1}).passed(),
                "CP2-bar m=0");
      o.require(check_su2(linear_cp2_bar(p, a), Su2Isotropy{WeightConvention::bundle, {ah}, {ah}, {-1}, 1}).passed(),
                "CP2-bar m=-1");
    }
  }
}

// Displayed leading coefficients, each against an independent Taylor
// expansion and the closed form.
void criterion7(Outcome& o) {
  int tuples = 0;
  while (tuples < 25) {
    const std::int64_t a = oracle::nonzero(9), b = oracle::nonzero(9), c = oracle::nonzero(9);
    const std::int64_t lambda = oracle::uniform(-9, 9), alpha = oracle::nonzero(5), m = oracle::uniform(-6, 6);
    const Rational ab(a * b);
    const PowerSeries pt = expand_point_term(a, b, lambda, 2);
    const auto pt_oracle = oracle::point_taylor(a, b, lambda, 2);
    o.require(pt[0] == Rational(4) / ab, "point s^0");
    o.require(pt[1] == Rational(4 * lambda + 4) / ab, "point s^1");
    for (int j = 0; j <= 2; ++j) o.require(pt[j] == pt_oracle[static_cast<std::size_t>(j)], "point taylor");
    const PowerSeries sp = expand_sphere_term(c, alpha, lambda, 2);
    const auto sp_oracle = oracle::sphere_taylor(c, alpha, lambda, 2);
    o.require(sp[0] == Rational(-4 * alpha, c * c), "sphere s^0");
    o.require(sp[1] == Rational(-4 * alpha * (lambda + 1), c * c), "sphere s^1");
    for (int j = 0; j <= 2; ++j) o.require(sp[j] == sp_oracle[static_cast<std::size_t>(j)], "sphere taylor");
    const PowerSeries bd = expand_boundary_term(c, m, lambda, 2);
    o.require(bd[0] == Rational(0), "boundary s^0");
    o.require(bd[1] == Rational(4 * m, c), "boundary s^1");
    ++tuples;
  }
}

void criterion8(Outcome& o) {
  int solved = 0;
  for (int n = 0; n < 200; ++n) {
    const std::int64_t p = oracle::small_primes()[static_cast<std::size_t>(oracle::uniform(0, 3))];
    const GroupAction x = gen::random_sum(p, static_cast<int>(oracle::uniform(1, 3)));
    PartialLineIsotropy partial;
    for (std::size_t i = 0; i < x.points.size(); ++i) partial.lambda_points.emplace_back(oracle::uniform(-9, 9));
    for (std::size_t j = 0; j < x.spheres.size(); ++j) {
      partial.lambda_spheres.emplace_back(oracle::uniform(-9, 9));
      partial.m_spheres.emplace_back(oracle::uniform(-9, 9));
    }
    if (!x.spheres.empty() && (n % 2 == 0 || x.points.empty())) {
      partial.m_spheres[0].reset();
    } else {
      partial.lambda_points[static_cast<std::size_t>(oracle::uniform(0, static_cast<std::int64_t>(x.points.size()) - 1))].reset();
    }
    try {
      o.require(oracle::theorem_a_holds(x, solve_theorem_a(x, partial)), "completion violates (1.1)");
      ++solved;
    } catch (const Error& e) {
      o.require(e.code() == Errc::not_solvable, e.what());
    }
  }
  o.require(solved >= 150, "only " + std::to_string(solved) + " solved");

  // Brute force on every single-unknown slot of small examples.
  for (std::int64_t p : {3, 5}) {
    for (const GroupAction& x : {linear_cp2(p, 1, 2), linear_cp2(p, 1, 0), linear_cp2_bar(p, 2 % p)}) {
      for (std::int64_t fill = 0; fill < p; ++fill) {
        LineIsotropy full{std::vector<std::int64_t>(x.points.size(), fill), std::vector<std::int64_t>(x.spheres.size(), fill),
                          std::vector<std::int64_t>(x.spheres.size(), (fill + 1) % p), std::nullopt};
        const std::size_t slots = x.points.size() + 2 * x.spheres.size();
        for (std::size_t s = 0; s < slots; ++s) {
          auto slot = [&](LineIsotropy& iso) -> std::int64_t& {
            if (s < x.points.size()) return iso.lambda_points[s];
            if (s < x.points.size() + x.spheres.size()) return iso.lambda_spheres[s - x.points.size()];
            return iso.m_spheres[s - x.points.size() - x.spheres.size()];
          };
          const auto zeros = oracle::scan_zeros(p, [&](std::int64_t v) {
            LineIsotropy t = full;
            slot(t) = v;
            return oracle::theorem_a_holds(x, t);
          });
          PartialLineIsotropy partial = to_partial(full);
          if (s < x.points.size()) {
            partial.lambda_points[s].reset();
          } else if (s < x.points.size() + x.spheres.size()) {
            partial.lambda_spheres[s - x.points.size()].reset();
          } else {
            partial.m_spheres[s - x.points.size() - x.spheres.size()].reset();
          }
          std::vector<std::int64_t> got;
          try {
            LineIsotropy out = solve_theorem_a(x, partial);
            if (zeros.size() == static_cast<std::size_t>(p)) {
              got = zeros;  // every value works; solver returns one representative
              o.require(slot(out) == 0, "degenerate representative");
            } else {
              got.push_back(reduce_mod(slot(out), p));
            }
          } catch (const Error& e) {
            o.require(e.code() == Errc::not_solvable, e.what());
          }
          o.require(got == zeros, "brute force mismatch p=" + std::to_string(p));
        }
      }
    }
  }
}

void criterion9(Outcome& o) {
  std::size_t count = 0;
  for (std::int64_t p : primes_upto(500, 2)) {
    for (std::int64_t alpha = -500 / p; alpha <= 500 / p; ++alpha) {
      if (alpha == 0) continue;
      std::int64_t abar = alpha < 0 ? -alpha : alpha, ppow = p;
      while (abar % p == 0) {
        abar /= p;
        ppow *= p;
      }
      const std::int64_t c = (p == 2) ? 1 : 1 + (std::abs(alpha) % (p - 1));
      for (std::int64_t lambda = 0; lambda < p; ++lambda) {
        for (std::int64_t m = 0; m < std::max<std::int64_t>(abar, 2); ++m) {
          const BoundaryChern d = boundary_chern_data({c, alpha}, lambda, m, p);
          const std::int64_t ell = d.ell.value();
          const bool first = reduce_mod(ell + lambda * alpha, ppow) == 0;
          const bool second = reduce_mod(ell - c * m, abar) == 0;
          o.require(first && second && d.ell.modulus() == ppow * abar,
                    "p=" + std::to_string(p) + " alpha=" + std::to_string(alpha));
          ++count;
        }
      }
    }
  }
  o.require(count > 10000, "grid too small");
}

void criterion10(Outcome& o) {
  int tested = 0;
  for (int n = 0; n < 400 && tested < 80; ++n) {
    const std::int64_t p = oracle::small_primes()[static_cast<std::size_t>(oracle::uniform(0, 4))];
    const GroupAction x = gen::random_sum(p, static_cast<int>(oracle::uniform(1, 4)));
    if (x.spheres.empty()) continue;
    PartialLineIsotropy partial;
    for (std::size_t i = 0; i < x.points.size(); ++i) partial.lambda_points.emplace_back(oracle::uniform(0, p - 1));
    for (std::size_t j = 0; j < x.spheres.size(); ++j) {
      partial.lambda_spheres.emplace_back(oracle::uniform(0, p - 1));
      partial.m_spheres.emplace_back(oracle::uniform(-5, 5));
    }
    partial.m_spheres[0].reset();
    const LineIsotropy iso = solve_theorem_a(x, partial);
    for (std::size_t j = 0; j < x.spheres.size(); ++j) {
      const GroupAction y = connected_sum_spheres(x, j, linear_cp2(p, reduce_mod(-x.spheres[j].c, p), 0), 0);
      const LineIsotropy ext = extend_isotropy_for_sphere_sum(iso, j);
      o.require(validate(y).passed(), "sum invalid");
      o.require(theorem_a_condition(y, ext).passed() && oracle::theorem_a_holds(y, ext), "condition lost");
    }
    ++tested;
  }
  o.require(tested >= 40, "too few examples with spheres");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"strata dimensions of the Z/5 action on #3 CP2-bar are 1 and 3", criterion1},
      {"rho invariant values, float oracle within 1e-9", criterion2},
      {"G-signature sums equal Sign(X) exactly", criterion3},
      {"congruence battery on linear models, p <= 97; perturbations fail", criterion4},
      {"line-bundle relations (i) = 0, (ii) = 1, p <= 50", criterion5},
      {"SU(2) relations on S4 and CP2-bar lifts, p <= 50", criterion6},
      {"displayed series coefficients at 25 random tuples", criterion7},
      {"solver soundness and brute force for p in {3, 5}", criterion8},
      {"CRT boundary data on p*|alpha| <= 500 grids", criterion9},
      {"sphere sum with the CP2 model preserves the existence condition", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.ok) std::cout << " (" << o.note.str() << ")";
    std::cout << "\n";
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
