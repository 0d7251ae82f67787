#ifndef EQV_CLI_HPP
#define EQV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eqv {

inline constexpr int kExitPass = 0;
inline constexpr int kExitRelationFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitValidationFailure = 3;

/// Runs one command line (without the program name). Document arguments name
/// files; "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eqv

#endif  // EQV_CLI_HPP
