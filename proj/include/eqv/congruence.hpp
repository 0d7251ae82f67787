#ifndef EQV_CONGRUENCE_HPP
#define EQV_CONGRUENCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqv/action_model.hpp"
#include "eqv/exact_arith.hpp"

namespace eqv {

/// One checked relation. `modulus` is 0 for exact (rational) comparisons,
/// otherwise lhs and required are residues in [0, modulus).
struct RelationResult {
  std::string name;
  Rational lhs;
  Rational required;
  std::int64_t modulus = 0;
  bool passed = false;
};

struct CongruenceReport {
  std::vector<RelationResult> relations;
  bool passed() const;
  /// Names of failed relations, comma separated.
  std::string failures() const;
};

/// Exact G-signature: for every k = 1..p-1 the fixed-point sum must equal
/// Sign(X). p odd.
CongruenceReport gsignature_check(const GroupAction& action);
/// Sign(t^k, X) from the fixed-point data (exact, any prime p).
Rational gsignature_value(const GroupAction& action, std::int64_t k);

/// Relations (1)-(4) and the untwisted series check in orders 0..p-2.
CongruenceReport check_rotation_relations(const GroupAction& action);

/// Existence condition for a line bundle lift: sum lambda_i/(a_i b_i) + sum (c_j m_j - lambda_j alpha_j)/c_j^2 = 0 mod p.
CongruenceReport theorem_a_condition(const GroupAction& action, const LineIsotropy& iso);

/// Completes the single unspecified entry so that the existence condition holds. The
/// answer is a residue in [0, p). If the unknown's coefficient vanishes mod p
/// and the condition already holds, any value works and 0 is returned.
LineIsotropy solve_theorem_a(const GroupAction& action, const PartialLineIsotropy& partial);

/// Line-bundle relations (i), (ii) and the twisted series check (orders 0, 1,
/// and 2 when p >= 5). Throws MissingChernSquare without c1_squared.
CongruenceReport check_line_bundle(const GroupAction& action, const LineIsotropy& iso);

/// SU(2) relation and its series check. Adjoint weights are halved first.
CongruenceReport check_su2(const GroupAction& action, const Su2Isotropy& iso);

/// lk(mu, mu) = ab/n reduced into [0, 1).
Rational linking_form(std::int64_t n, std::int64_t a, std::int64_t b);

/// lambda (ab)^{-1} mod n.
Residue flat_chern_class(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t lambda);

struct BoundaryChern {
  /// ell mod p^{e+1} abar, where |alpha| = p^e abar and p does not divide abar.
  Residue ell;
  /// ell / c^2 for the least non-negative ell.
  Rational coefficient;
};

/// Solves ell = -lambda alpha (mod p^{e+1}), ell = c m (mod abar).
BoundaryChern boundary_chern_data(const FixedSphere& sphere, std::int64_t lambda, std::int64_t m, std::int64_t p);

struct SearchProfile {
  std::int64_t p = 0;
  std::size_t n_points = 0;
  std::vector<std::int64_t> sphere_alphas;
  std::int64_t signature = 0;
  std::int64_t euler = 0;
  std::int64_t b2 = 0;
};

/// Return false to stop the enumeration.
using SearchSink = std::function<bool(const GroupAction&)>;

/// Streams rotation data passing check_rotation_relations, one canonical
/// (sorted) action per multiset, in increasing (points, spheres) order.
/// Sphere normal weights are taken in [1, (p-1)/2]. Stops after `limit`
/// results when given. Returns the number emitted.
std::size_t search_realizable(const SearchProfile& profile, const SearchSink& sink,
                              std::optional<std::size_t> limit = std::nullopt);

/// Results of shard `index` of `count`; shards partition the space by the
/// first point class.
std::vector<GroupAction> search_shard(const SearchProfile& profile, std::size_t index, std::size_t count);

/// All results, shards evaluated on `threads` threads and merged in the
/// same order as search_realizable.
std::vector<GroupAction> search_parallel(const SearchProfile& profile, std::size_t threads);

}  // namespace eqv

#endif  // EQV_CONGRUENCE_HPP
