#include "mwlat/io/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "mwlat/error.hpp"
#include "mwlat/format.hpp"

namespace mwlat {

namespace {

class Lexer {
 public:
  Lexer(std::string_view s, std::size_t offset) : s_(s), off_(offset) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  std::size_t pos() {
    skip();
    return off_ + i_;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos()); }

  std::string integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    return std::string(s_.substr(start, i_ - start));
  }
  std::optional<std::string> identifier() {
    skip();
    if (i_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) return std::nullopt;
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

 private:
  std::string_view s_;
  std::size_t off_;
  std::size_t i_ = 0;
};

ParsedTerm parse_term(Lexer& lx) {
  ParsedTerm t;
  t.position = lx.pos();
  t.coeff = 1;
  bool any = false;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    Integer num(lx.integer());
    Integer den = 1;
    if (lx.accept('/')) {
      std::size_t at = lx.pos();
      den = Integer(lx.integer());
      if (den == 0) throw ParseError("zero denominator", at);
    }
    t.coeff = Rational(num, den);
    t.coeff.canonicalize();
    any = true;
  }
  for (;;) {
    const bool star = lx.accept('*');
    auto id = lx.identifier();
    if (!id) {
      if (star || !any) lx.fail("expected a monomial");
      break;
    }
    long e = 1;
    if (lx.accept('^')) {
      std::size_t at = lx.pos();
      std::string digits = lx.integer();
      if (digits.size() > 6) throw ParseError("exponent too large", at);
      e = std::stol(digits);
    }
    t.exponents[*id] += e;
    any = true;
  }
  return t;
}

NFElement generator_monomial(const FieldPtr& field, const ParsedTerm& t,
                             const std::map<std::string, std::size_t>& gens,
                             const std::vector<std::string>& skip) {
  NFElement c(field, t.coeff);
  for (const auto& [name, e] : t.exponents) {
    if (std::find(skip.begin(), skip.end(), name) != skip.end()) continue;
    auto it = gens.find(name);
    if (it == gens.end()) throw ParseError("unknown generator name '" + name + "'", t.position);
    c *= NFElement::generator(field, it->second).pow(e);
  }
  return c;
}

std::map<std::string, std::size_t> generator_levels(const FieldPtr& field) {
  std::map<std::string, std::size_t> out;
  const auto names = field->generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = i + 1;
  return out;
}

long exponent_of(const ParsedTerm& t, const std::string& v) {
  auto it = t.exponents.find(v);
  return it == t.exponents.end() ? 0 : it->second;
}

void add_coeff(std::vector<NFElement>& v, std::size_t i, const NFElement& c) {
  if (v.size() <= i) v.resize(i + 1, NFElement(c.field()));
  v[i] += c;
}

}  // namespace

std::vector<ParsedTerm> parse_expression(std::string_view text, std::size_t offset) {
  Lexer lx(text, offset);
  std::vector<ParsedTerm> out;
  if (lx.done()) lx.fail("empty expression");
  bool neg = false;
  if (lx.accept('-'))
    neg = true;
  else
    lx.accept('+');
  for (;;) {
    ParsedTerm t = parse_term(lx);
    if (neg) t.coeff = -t.coeff;
    out.push_back(std::move(t));
    if (lx.done()) break;
    if (lx.accept('+'))
      neg = false;
    else if (lx.accept('-'))
      neg = true;
    else
      lx.fail(std::string("unexpected character '") + lx.peek() + "'");
  }
  return out;
}

FieldPtr parse_field_spec(std::string_view text) {
  FieldPtr field = NumberField::rationals();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    const std::size_t colon = part.find(':');
    bool blank = part.find_first_not_of(" \t\n") == std::string_view::npos;
    if (!blank) {
      if (colon == std::string_view::npos) throw ParseError("expected 'name: modulus'", start);
      Lexer name_lx(part.substr(0, colon), start);
      auto name = name_lx.identifier();
      if (!name || !name_lx.done()) throw ParseError("bad generator name", start);
      if (*name == "t" || *name == "t0" || *name == "t1" || *name == "x" || *name == "y")
        throw ParseError("reserved generator name '" + *name + "'", start);
      const auto gens = generator_levels(field);
      if (gens.count(*name)) throw ParseError("duplicate generator name '" + *name + "'", start);
      std::vector<NFElement> coeffs;
      for (const auto& t : parse_expression(part.substr(colon + 1), start + colon + 1)) {
        const long e = exponent_of(t, *name);
        add_coeff(coeffs, static_cast<std::size_t>(e), generator_monomial(field, t, gens, {*name}));
      }
      while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
      try {
        field = field->adjoin(*name, coeffs);
      } catch (const MathError& e) {
        throw ParseError(e.what(), start);
      }
    }
    start = end + 1;
  }
  return field;
}

std::string field_spec_string(const FieldPtr& field) {
  std::vector<FieldPtr> levels;
  for (FieldPtr f = field; !f->is_rationals(); f = f->base()) levels.push_back(f);
  std::string out;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const auto& lvl = *it;
    std::vector<Term> terms;
    const auto& mod = lvl->modulus();
    for (std::size_t i = mod.size(); i-- > 0;) {
      std::string mono = i == 0 ? "" : (i == 1 ? lvl->name() : lvl->name() + "^" + std::to_string(i));
      append_element_terms(terms, NFElement(lvl->base(), mod[i]), mono);
    }
    if (!out.empty()) out += "; ";
    out += lvl->name() + ": " + join_terms(terms, true);
  }
  return out;
}

NFElement parse_element(std::string_view text, const FieldPtr& field) {
  const auto gens = generator_levels(field);
  NFElement c(field);
  for (const auto& t : parse_expression(text)) c += generator_monomial(field, t, gens, {});
  return c;
}

Poly parse_poly(std::string_view text, const FieldPtr& field, const std::string& var) {
  const auto gens = generator_levels(field);
  std::vector<NFElement> coeffs;
  for (const auto& t : parse_expression(text))
    add_coeff(coeffs, static_cast<std::size_t>(exponent_of(t, var)), generator_monomial(field, t, gens, {var}));
  return Poly(field, std::move(coeffs));
}

WeierstrassModel parse_model(std::string_view text, const FieldPtr& field) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected 'y^2 = ...'", 0);
  {
    auto lhs = parse_expression(text.substr(0, eq));
    if (lhs.size() != 1 || lhs[0].coeff != 1 || lhs[0].exponents != std::map<std::string, long>{{"y", 2}})
      throw ParseError("left-hand side must be y^2", 0);
  }
  const auto terms = parse_expression(text.substr(eq + 1), eq + 1);
  const auto gens = generator_levels(field);
  const std::vector<std::string> vars{"x", "t", "t0", "t1"};

  bool affine = false, homogeneous = false;
  bool cubic = false;
  std::vector<NFElement> fa, ga;            // affine coefficients by t exponent
  std::map<std::pair<long, long>, NFElement> fh, gh;  // homogeneous by (t0, t1)
  for (const auto& t : terms) {
    for (const auto& [name, e] : t.exponents)
      if (name == "y") throw ParseError("y may only appear on the left-hand side", t.position);
    const long ex = exponent_of(t, "x"), et = exponent_of(t, "t");
    const long e0 = exponent_of(t, "t0"), e1 = exponent_of(t, "t1");
    if (et > 0) affine = true;
    if (e0 > 0 || e1 > 0) homogeneous = true;
    if (affine && homogeneous) throw ParseError("mixing t with t0, t1", t.position);
    const NFElement c = generator_monomial(field, t, gens, vars);
    if (ex == 3) {
      if (cubic || et || e0 || e1 || !c.is_one()) throw ParseError("the x^3 term must be exactly x^3", t.position);
      cubic = true;
      continue;
    }
    if (ex != 0 && ex != 1) throw ParseError("x may only appear to the powers 3, 1, 0", t.position);
    if (et > 0 || !homogeneous) add_coeff(ex ? fa : ga, static_cast<std::size_t>(et), c);
    auto& target = ex ? fh : gh;
    auto [it, fresh] = target.try_emplace({e0, e1}, c);
    if (!fresh) it->second += c;
  }
  if (!cubic) throw ParseError("missing x^3 term", eq + 1);

  if (!homogeneous) return WeierstrassModel::from_affine(Poly(field, fa), Poly(field, ga));

  auto degree_of = [&](const std::map<std::pair<long, long>, NFElement>& m, const char* which) -> std::optional<long> {
    std::optional<long> deg;
    for (const auto& [k, c] : m) {
      if (c.is_zero()) continue;
      const long d = k.first + k.second;
      if (deg && *deg != d) throw ParseError(std::string("degree inconsistency: ") + which + " is not homogeneous", eq + 1);
      deg = d;
    }
    return deg;
  };
  const auto df = degree_of(fh, "F"), dg = degree_of(gh, "G");
  long d = -1;
  if (df) {
    if (*df % 4) throw ParseError("degree inconsistency: deg F = " + std::to_string(*df) + " is not 4d", eq + 1);
    d = *df / 4;
  }
  if (dg) {
    if (*dg % 6) throw ParseError("degree inconsistency: deg G = " + std::to_string(*dg) + " is not 6d", eq + 1);
    if (d >= 0 && d != *dg / 6)
      throw ParseError("degree inconsistency: deg F = " + std::to_string(*df) + " but deg G = " + std::to_string(*dg),
                       eq + 1);
    d = *dg / 6;
  }
  if (d < 0) throw MathError("singular family: f = g = 0");
  auto build = [&](const std::map<std::pair<long, long>, NFElement>& m, long deg) {
    std::vector<NFElement> v;
    for (const auto& [k, c] : m) add_coeff(v, static_cast<std::size_t>(k.first), c);
    return HomPoly(Poly(field, v), deg);
  };
  return WeierstrassModel(build(fh, 4 * d), build(gh, 6 * d), d);
}

}  // namespace mwlat
