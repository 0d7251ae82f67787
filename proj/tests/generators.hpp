// Linear models and random equivariant connected sums of them.
#ifndef EQV_TESTS_GENERATORS_HPP
#define EQV_TESTS_GENERATORS_HPP

#include <optional>
#include <vector>

#include "eqv/action_model.hpp"
#include "oracles.hpp"

namespace gen {

inline std::vector<eqv::GroupAction> linear_models(std::int64_t p) {
  std::vector<eqv::GroupAction> out;
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      if (a != b) out.push_back(eqv::linear_cp2(p, a, b));
    }
    out.push_back(eqv::linear_cp2_bar(p, a));
    for (std::int64_t b = 1; b < p; ++b) out.push_back(eqv::linear_s4(p, a, b));
  }
  return out;
}

inline eqv::GroupAction random_linear(std::int64_t p) {
  switch (oracle::uniform(0, 3)) {
    case 0: {
      const std::int64_t a = oracle::uniform(1, p - 1);
      std::int64_t b = oracle::uniform(1, p - 1);
      if (b == a) b = 0;
      return eqv::linear_cp2(p, a, b);
    }
    case 1:
      return eqv::linear_cp2_bar(p, oracle::uniform(1, p - 1));
    case 2:
      return eqv::reverse_orientation(eqv::linear_cp2(p, oracle::uniform(1, p - 1), 0));
    default:
      return eqv::linear_s4(p, oracle::uniform(1, p - 1), oracle::uniform(1, p - 1));
  }
}

/// Glues a fresh linear model onto `x` at a random compatible point or
/// sphere; the partner model is chosen to match.
inline eqv::GroupAction grow(const eqv::GroupAction& x) {
  const std::int64_t p = x.p;
  const bool at_sphere = !x.spheres.empty() && (x.points.empty() || oracle::uniform(0, 1) == 0);
  if (at_sphere) {
    const std::size_t i = static_cast<std::size_t>(oracle::uniform(0, static_cast<std::int64_t>(x.spheres.size()) - 1));
    const std::int64_t c = eqv::reduce_mod(-x.spheres[i].c, p);
    const eqv::GroupAction partner = oracle::uniform(0, 1) ? eqv::linear_cp2(p, c, 0) : eqv::linear_cp2_bar(p, c);
    return eqv::connected_sum_spheres(x, i, partner, 0);
  }
  const std::size_t i = static_cast<std::size_t>(oracle::uniform(0, static_cast<std::int64_t>(x.points.size()) - 1));
  const eqv::IsolatedPoint want = eqv::canonical_point({x.points[i].a, -x.points[i].b}, p);
  // Any linear model with a point whose reversal matches; S4 always has one.
  for (int attempt = 0; attempt < 20; ++attempt) {
    const eqv::GroupAction partner = random_linear(p);
    for (std::size_t j = 0; j < partner.points.size(); ++j) {
      if (partner.points[j] == want) return eqv::connected_sum_points(x, i, partner, j);
    }
  }
  return eqv::connected_sum_points(x, i, eqv::linear_s4(p, want.a, want.b), 0);
}

inline eqv::GroupAction random_sum(std::int64_t p, int pieces) {
  eqv::GroupAction x = random_linear(p);
  for (int n = 1; n < pieces; ++n) x = grow(x);
  return x;
}

}  // namespace gen

#endif  // EQV_TESTS_GENERATORS_HPP
