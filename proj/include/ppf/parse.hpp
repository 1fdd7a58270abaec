#pragma once

#include <string>

#include "ppf/field.hpp"
#include "ppf/permpoly.hpp"

namespace ppf {

/// Parses a field spec string: "q=5" / "q=9" (prime power) or
/// "p=3,k=2,mod=1,0,1" (ascending modulus coefficients).
FieldCtx parse_field_spec(const std::string& text);

/// Parses a polynomial: either an ascending coefficient list "0,3,2,1" or an
/// expression "x^3+2x^2+3x". Coefficients are reduced mod p for prime fields
/// and taken as element codes (< q) for extension fields; the result is
/// reduced mod x^q - x.
PermPoly parse_poly(const FieldCtx& f, const std::string& text);

/// Ascending coefficient list, e.g. "0,3,2,1".
std::string render_coeffs(const PermPoly& poly);

}  // namespace ppf
