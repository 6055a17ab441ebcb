#include "mwlat/algebra/poly.hpp"

#include "mwlat/algebra/modular.hpp"
#include "mwlat/error.hpp"
#include "mwlat/format.hpp"

namespace mwlat {

Poly::Poly(FieldPtr field, std::vector<NFElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw MathError("polynomial coefficient from a different field");
  trim();
}

Poly::Poly(FieldPtr field, const std::vector<Rational>& coeffs) : field_(std::move(field)) {
  for (const auto& q : coeffs) c_.emplace_back(field_, q);
  trim();
}

Poly Poly::constant(const NFElement& c) { return Poly(c.field(), std::vector<NFElement>{c}); }

Poly Poly::monomial(const NFElement& c, std::size_t degree) {
  std::vector<NFElement> v(degree + 1, NFElement(c.field()));
  v[degree] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::variable(const FieldPtr& field) { return monomial(NFElement(field, 1), 1); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NFElement Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : NFElement(field_); }

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * lead().inverse();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<NFElement> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Poly(field_, std::move(d));
}

NFElement Poly::eval(const NFElement& x) const {
  NFElement acc(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::scale_variable(const NFElement& c) const {
  Poly r = *this;
  NFElement power(field_, 1);
  for (auto& coef : r.c_) {
    coef *= power;
    power *= c;
  }
  r.trim();
  return r;
}

Poly Poly::inflate(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<NFElement> v((c_.size() - 1) * k + 1, NFElement(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return Poly(field_, std::move(v));
}

Poly Poly::pow(std::size_t e) const {
  Poly result = constant(NFElement(field_, 1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::embed(const FieldPtr& larger) const {
  std::vector<NFElement> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.embed(larger));
  return Poly(larger, std::move(v));
}

std::size_t Poly::t_adic_order() const {
  if (is_zero()) throw MathError("valuation of the zero polynomial");
  std::size_t k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

Poly Poly::shift_down(std::size_t k) const {
  if (k == 0) return *this;
  if (k > c_.size()) throw MathError("shift_down past degree");
  for (std::size_t i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero()) throw MathError("t^k does not divide polynomial");
  return Poly(field_, std::vector<NFElement>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (field_ != o.field_) throw MathError("number field mismatch");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), NFElement(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (field_ != o.field_) throw MathError("number field mismatch");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), NFElement(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) throw MathError("number field mismatch");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<NFElement> out(a.c_.size() + b.c_.size() - 1, NFElement(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(a.field_, std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const NFElement& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::vector<Term> terms;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    append_element_terms(terms, c_[i], i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i));
  }
  return join_terms(terms, true);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  const FieldPtr& f = a.field();
  Poly r = a;
  if (r.degree() < b.degree()) return {Poly(f), r};
  std::vector<NFElement> q(static_cast<std::size_t>(r.degree() - b.degree() + 1), NFElement(f));
  const NFElement lead_inv = b.lead().inverse();
  const bool monic = b.lead().is_one();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    NFElement c = monic ? r.lead() : r.lead() * lead_inv;
    r -= Poly::monomial(c, shift) * b;
    q[shift] = std::move(c);
  }
  return {Poly(f, std::move(q)), r};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MathError("inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).second.is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly::constant(NFElement(a.field(), 1));
  if (auto g = modular_gcd(a, b)) return *g;
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::size_t valuation(const Poly& q, const Poly& pi) {
  if (q.is_zero()) throw MathError("valuation of the zero polynomial");
  if (pi.degree() < 1) throw MathError("valuation at a constant polynomial");
  std::size_t e = 0;
  Poly cur = q;
  for (;;) {
    auto [quo, rem] = divmod(cur, pi);
    if (!rem.is_zero()) return e;
    cur = std::move(quo);
    ++e;
  }
}

std::vector<std::pair<std::size_t, Poly>> squarefree_decomposition(const Poly& q) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<std::size_t, Poly>> out;
  if (q.degree() < 1) return out;
  Poly a = q.monic();
  Poly d = a.derivative();
  Poly g = gcd(a, d);
  Poly b = exact_div(a, g);
  Poly c = exact_div(d, g) - b.derivative();
  for (std::size_t k = 1; b.degree() >= 1; ++k) {
    Poly h = gcd(b, c);
    if (h.degree() >= 1) out.emplace_back(k, h);
    b = exact_div(b, h);
    c = exact_div(c, h) - b.derivative();
  }
  return out;
}

}  // namespace mwlat
