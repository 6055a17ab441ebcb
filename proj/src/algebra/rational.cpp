#include "mwlat/algebra/rational.hpp"

#include <cctype>

#include "mwlat/error.hpp"

namespace mwlat {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer integer_from(const std::string& s) {
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("invalid rational '" + text + "'");
  if (slash == std::string::npos) return Rational(integer_from(num));
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(den)) throw ParseError("invalid rational '" + text + "'");
  Integer d = integer_from(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(integer_from(num), d);
  q.canonicalize();
  return q;
}

}  // namespace mwlat
