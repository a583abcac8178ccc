#pragma once

// Text readers shared by the CLI and the tests. All of them throw ParseError
// with a 1-based column on malformed input.
//
// Polynomials: integer literals, variable identifiers, + - * ^ and
// parentheses. Multiplication must be written out ("2*x", never "2x").
// Scalars: integers or fractions a/b; over GF(p^k) with k > 1 a polynomial
// in the generator `a` is also accepted ("a^2+1").

#include "a1deg/field.hpp"
#include "a1deg/matrix.hpp"
#include "a1deg/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace a1deg {

/// QQ | RR | CC | GF(q), q an odd prime power.
FieldDesc parse_field(std::string_view text);

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
/// Polynomials separated by commas, semicolons or newlines.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

Scalar parse_scalar(std::string_view text, const FieldDesc& F);
/// Comma-separated scalars, optionally wrapped in <...>, (...) or [...].
std::vector<Scalar> parse_scalar_list(std::string_view text, const FieldDesc& F);
/// "[[1,3],[3,7]]"
Matrix<Scalar> parse_matrix(std::string_view text, const FieldDesc& F);

/// Comma-separated identifiers.
std::vector<std::string> parse_variable_list(std::string_view text);

} // namespace a1deg
