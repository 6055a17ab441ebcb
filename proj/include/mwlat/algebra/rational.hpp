#pragma once

#include <gmpxx.h>

#include <string>

namespace mwlat {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q = 0.
Rational parse_rational(const std::string& text);

}  // namespace mwlat
