#include "eqv/error.hpp"

namespace eqv {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_invertible: return "NotInvertible";
    case Errc::denominator_divisible: return "DenominatorDivisible";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::invalid_modulus: return "InvalidModulus";
    case Errc::modulus_mismatch: return "ModulusMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::zero_rotation: return "ZeroRotation";
    case Errc::not_rational: return "NotRational";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::bad_weights: return "BadWeights";
    case Errc::incompatible_points: return "IncompatiblePoints";
    case Errc::incompatible_spheres: return "IncompatibleSpheres";
    case Errc::not_solvable: return "NotSolvable";
    case Errc::underdetermined: return "Underdetermined";
    case Errc::overdetermined: return "Overdetermined";
    case Errc::missing_chern_square: return "MissingChernSquare";
    case Errc::zero_self_intersection: return "ZeroSelfIntersection";
    case Errc::inconsistent_counts: return "InconsistentCounts";
    case Errc::parity_error: return "ParityError";
    case Errc::non_integer_dimension: return "NonIntegerDimension";
    case Errc::has_spheres: return "HasSpheres";
    case Errc::not_involution: return "NotInvolution";
    case Errc::rho_mismatch: return "RhoMismatch";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::invalid_action: return "InvalidAction";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace eqv
