#ifndef EQV_ERROR_HPP
#define EQV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqv {

enum class Errc {
  not_invertible,
  denominator_divisible,
  not_coprime,
  invalid_modulus,
  modulus_mismatch,
  division_by_zero,
  zero_rotation,
  not_rational,
  not_a_unit,
  bad_weights,
  incompatible_points,
  incompatible_spheres,
  not_solvable,
  underdetermined,
  overdetermined,
  missing_chern_square,
  zero_self_intersection,
  inconsistent_counts,
  parity_error,
  non_integer_dimension,
  has_spheres,
  not_involution,
  rho_mismatch,
  length_mismatch,
  invalid_action,
  invalid_argument,
  parse_error,
};

/// CamelCase name of an error code, e.g. "NotInvertible".
std::string_view errc_name(Errc code) noexcept;

/// The single exception type thrown by the library; `code()` identifies the
/// failure, `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eqv

#endif  // EQV_ERROR_HPP
