#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mwlat/algebra/poly.hpp"
#include "mwlat/weierstrass.hpp"

namespace mwlat {

// A monomial with rational coefficient, as read from text.
struct ParsedTerm {
  Rational coeff;
  std::map<std::string, long> exponents;
  std::size_t position = 0;  // offset of the term in the source text
};

// expr := term (('+'|'-') term)*
// term := coeff? ('*'? monomial)*
// monomial := identifier ('^' nat)?
// coeff := integer | integer '/' integer
// Positions in errors are offsets into `text` plus `offset`.
std::vector<ParsedTerm> parse_expression(std::string_view text, std::size_t offset = 0);

// "z: z^4 + z^3 + z^2 + z + 1; r: r^5 - 2". Each modulus is monic in its own
// generator with coefficients in the earlier ones. Empty text gives Q.
FieldPtr parse_field_spec(std::string_view text);
std::string field_spec_string(const FieldPtr& field);

// Field element written in the generator names, e.g. "1 + z^2 - 1/2 r".
NFElement parse_element(std::string_view text, const FieldPtr& field);
// Polynomial in `var` with coefficients in `field`.
Poly parse_poly(std::string_view text, const FieldPtr& field, const std::string& var = "t");

// "y^2 = x^3 + F x + G" with F, G in t (affine) or t0, t1 (homogeneous).
WeierstrassModel parse_model(std::string_view text, const FieldPtr& field = NumberField::rationals());

}  // namespace mwlat
