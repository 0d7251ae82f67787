#ifndef EQV_DOCUMENT_HPP
#define EQV_DOCUMENT_HPP

#include <optional>
#include <string>

#include "eqv/action_model.hpp"

namespace eqv {

/// Action plus optional isotropy sections, as read from a JSON document:
///
///   {"p": 5, "signature": -3, "euler": 5, "b2": 3,
///    "points": [[1, -1], [2, -1]], "spheres": [{"c": 1, "alpha": -2}],
///    "line": {"lambda_points": [..], "lambda_spheres": [..], "m": [..], "c1_squared": 1},
///    "su2": {"convention": "adjoint", "ell_points": [..], "ell_spheres": [..], "m": [..], "c2": 1}}
///
/// Line entries may be null (unknowns for the solver).
struct ActionDocument {
  GroupAction action;
  std::optional<PartialLineIsotropy> line;
  std::optional<Su2Isotropy> su2;
};

/// Throws ParseError on malformed JSON, missing keys or wrong types.
ActionDocument parse_document(const std::string& text);
std::string serialize_document(const ActionDocument& doc);

/// Line section with every entry present; InvalidArgument otherwise.
LineIsotropy complete_line(const PartialLineIsotropy& partial);

}  // namespace eqv

#endif  // EQV_DOCUMENT_HPP
