#include <doctest.h>

#include <cmath>
#include <complex>

#include "eqv/cyclotomic.hpp"
#include "oracles.hpp"

using namespace eqv;

namespace {

CycloNum random_element(int p) {
  std::vector<Rational> poly;
  for (int i = 0; i < p - 1; ++i) poly.emplace_back(oracle::uniform(-6, 6), oracle::uniform(1, 4));
  return CycloNum::from_polynomial(p, poly);
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("reduction of zeta^(p-1)") {
  for (int p : {3, 5, 7, 11}) {
    const CycloNum z = CycloNum::root_power(p, 1);
    const CycloNum prod = z * CycloNum::root_power(p, p - 2);
    for (const auto& c : prod.coefficients()) CHECK(c == Rational(-1));
    CHECK(z + CycloNum(p) == z);
    CHECK(CycloNum::root_power(p, p) == CycloNum(p, Rational(1)));
  }
}

TEST_CASE("(1+z)(1+z^2) for p = 5") {
  const int p = 5;
  const CycloNum one(p, Rational(1));
  const CycloNum x = (one + CycloNum::root_power(p, 1)) * (one + CycloNum::root_power(p, 2));
  const std::vector<Rational> expect{1, 1, 1, 1};
  CHECK(std::vector<Rational>(x.coefficients().begin(), x.coefficients().end()) == expect);
}

TEST_CASE("field mismatch") {
  try {
    (void)(CycloNum(3) + CycloNum(5));
    FAIL("expected ModulusMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::modulus_mismatch);
  }
}

TEST_CASE("cyclo_inv examples") {
  CHECK(cyclo_inv(CycloNum(7, Rational(1))) == CycloNum(7, Rational(1)));
  CHECK(cyclo_inv(CycloNum::root_power(7, 1)) == CycloNum::root_power(7, 6));
  // p = 3: (z - 1)^{-1} = (-2 - z)/3
  const CycloNum zm1 = CycloNum::root_power(3, 1) - CycloNum(3, Rational(1));
  const std::vector<Rational> poly{Rational(-2, 3), Rational(-1, 3)};
  const CycloNum expect = CycloNum::from_polynomial(3, poly);
  CHECK(cyclo_inv(zm1) == expect);
  CHECK(zm1 * expect == CycloNum(3, Rational(1)));
  CHECK_THROWS_AS(cyclo_inv(CycloNum(5)), Error);
}

TEST_CASE("cyclo_inv round trip") {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int n = 0; n < 20; ++n) {
      const CycloNum x = random_element(p);
      if (x.is_zero()) continue;
      CHECK(x * cyclo_inv(x) == CycloNum(p, Rational(1)));
    }
  }
}

TEST_CASE("closed-form inverse of zeta^e - 1 agrees with Euclid") {
  for (int p : {3, 5, 7, 13}) {
    for (std::int64_t e = 1; e < p; ++e) {
      const CycloNum x = CycloNum::root_power(p, e) - CycloNum(p, Rational(1));
      CHECK(inverse_root_minus_one(p, e) == cyclo_inv(x));
    }
  }
}

TEST_CASE("point term examples") {
  const CycloNum v = eval_point_term(3, 1, 1, 2);
  const std::complex<double> z = v.embed(1);
  const double expect = -oracle::cot(std::numbers::pi / 3) * oracle::cot(2 * std::numbers::pi / 3);
  CHECK(z.real() == doctest::Approx(expect).epsilon(1e-12));
  CHECK(expect == doctest::Approx(1.0 / 3.0));
  CHECK(std::abs(z.imag()) < 1e-12);
  for (int p : {5, 7, 11}) {
    for (std::int64_t k = 1; k < p; ++k) {
      for (std::int64_t a = 1; a < p; ++a) {
        const double r = eval_point_term(p, k, a, -a).embed(1).real();
        CHECK(r >= -1e-12);
        CHECK(eval_point_term(p, k, a, 2) == eval_point_term(p, k, 2, a));
      }
    }
  }
  try {
    eval_point_term(5, 1, 5, 1);
    FAIL("expected ZeroRotation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_rotation);
  }
}

TEST_CASE("sphere term examples") {
  const double csc2 = 1.0 / std::pow(std::sin(std::numbers::pi / 5), 2);
  CHECK(eval_sphere_term(5, 1, 1, 1).embed(1).real() == doctest::Approx(csc2).epsilon(1e-12));
  CHECK(csc2 == doctest::Approx(2.894).epsilon(1e-3));
  CHECK(eval_sphere_term(7, 3, 2, 0).is_zero());
  for (std::int64_t k = 1; k < 7; ++k) {
    CHECK(eval_sphere_term(7, k, 3, -2).embed(1).real() ==
          doctest::Approx(eval_sphere_term(7, 7 - k, 3, -2).embed(1).real()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(eval_sphere_term(7, 1, 14, 1), Error);
}

TEST_CASE("galois_sum examples") {
  CHECK(galois_sum(7, [](std::int64_t) { return CycloNum(7, Rational(1)); }) == Rational(6));
  CHECK(galois_sum(7, [](std::int64_t k) { return CycloNum::root_power(7, k); }) == Rational(-1));
  // sum_k -cot(pi k/5) cot(4 pi k/5) = sum cot^2(pi k/5)
  double f = 0.0;
  for (int k = 1; k < 5; ++k) f += std::pow(oracle::cot(oracle::theta(k, 1, 5)), 2);
  const Rational s = galois_sum(5, [](std::int64_t k) { return eval_point_term(5, k, 1, 4); });
  CHECK(s.to_double() == doctest::Approx(f).epsilon(1e-12));
  CHECK(s == Rational(4));
  try {
    galois_sum(5, [](std::int64_t) { return CycloNum::root_power(5, 1); });
    FAIL("expected NotRational");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_rational);
  }
}

TEST_CASE("encoding identities against trigonometry") {
  for (int n = 0; n < 50; ++n) {
    const int p = static_cast<int>(oracle::small_primes()[static_cast<std::size_t>(oracle::uniform(0, 4))]);
    const std::int64_t k = oracle::uniform(1, p - 1);
    const std::int64_t a = oracle::uniform(1, p - 1);
    const std::int64_t c = oracle::uniform(1, p - 1);
    const std::int64_t l = oracle::uniform(-20, 20);
    const std::complex<double> u = cot_ratio(p, k * a).embed(1);
    CHECK(std::abs(u - std::complex<double>(0.0, -oracle::cot(oracle::theta(k, a, p)))) < 1e-10);
    const double csc2 = 1.0 / std::pow(std::sin(oracle::theta(k, c, p)), 2);
    CHECK(std::abs(eval_sphere_term(p, k, c, 1).embed(1) - std::complex<double>(csc2, 0.0)) < 1e-10);
    const double s2 = std::pow(std::sin(oracle::theta(k, l, p)), 2);
    CHECK(std::abs(sin_squared(p, k * l).embed(1) - std::complex<double>(s2, 0.0)) < 1e-10);
  }
}

TEST_CASE("trace is the Galois sum over all embeddings") {
  for (int p : {3, 5, 7}) {
    const CycloNum x = random_element(p);
    CHECK(x.trace() == galois_sum(p, [&](std::int64_t k) { return x.galois(k); }));
  }
}

TEST_CASE("p = 2 field") {
  const CycloNum z = CycloNum::root_power(2, 1);
  CHECK(z == CycloNum(2, Rational(-1)));
  CHECK(cot_ratio(2, 1).is_zero());
  CHECK(eval_sphere_term(2, 1, 1, 3).rational_value() == Rational(3));
}

}
