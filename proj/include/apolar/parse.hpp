#ifndef APOLAR_PARSE_HPP
#define APOLAR_PARSE_HPP

#include <string>

#include "apolar/poly.hpp"

namespace apolar {

/// Parses the expression language for divided power polynomials.
/// Variables are x1..xn, divided powers are written x1^[3] (bare x1 means
/// x1^[1]; x1^2 is rejected with a hint), '*' is mandatory between factors,
/// coefficients are integers or fractions p/q, '+'/'-' and parentheses as
/// usual.
DpPoly parse_poly(const std::string& text, int n, const FieldSpec& field);

/// Same grammar on the operator side: variables dx1..dxn with ordinary
/// powers dx1^2 (dx1^[2] is rejected with a hint).
Operator parse_operator(const std::string& text, int n, const FieldSpec& field);

}  // namespace apolar

#endif
