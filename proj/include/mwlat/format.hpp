#pragma once

#include <string>
#include <vector>

#include "mwlat/algebra/number_field.hpp"

namespace mwlat {

// One signed term of a printed polynomial: coefficient times a monomial string.
struct Term {
  Rational coeff;
  std::string monomial;  // empty for a constant
};

// Expands c * monomial into rational multiples of generator monomials, e.g. "2 z^2 t0".
void append_element_terms(std::vector<Term>& out, const NFElement& c, const std::string& monomial);

// "t0^2 - 3 t1 + 1/2"; with leading = false every term carries its sign: "+ t0 - 1".
std::string join_terms(const std::vector<Term>& terms, bool leading);

}  // namespace mwlat
