#include "mwlat/algebra/ratfunc.hpp"

#include "mwlat/error.hpp"

namespace mwlat {

RatFunc::RatFunc(FieldPtr field)
    : num_(field), den_(Poly::constant(NFElement(field, 1))) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(NFElement(num_.field(), 1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(NFElement(num_.field(), 1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.is_monic()) {
    const NFElement inv = den_.lead().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc ratfunc_normalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::scale_variable(const NFElement& c) const {
  return RatFunc(num_.scale_variable(c), den_.scale_variable(c));
}

RatFunc RatFunc::embed(const FieldPtr& larger) const {
  return RatFunc(num_.embed(larger), den_.embed(larger), Normalized{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, a.den_, RatFunc::Normalized{});
  // Cross-cancel first to keep degrees down.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly n1 = g1.degree() > 0 ? exact_div(a.num_, g1) : a.num_;
  Poly d2 = g1.degree() > 0 ? exact_div(b.den_, g1) : b.den_;
  Poly n2 = g2.degree() > 0 ? exact_div(b.num_, g2) : b.num_;
  Poly d1 = g2.degree() > 0 ? exact_div(a.den_, g2) : a.den_;
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator*(const RatFunc& a, const NFElement& c) {
  if (c.is_zero()) return RatFunc(a.field());
  return RatFunc(a.num_ * c, a.den_, RatFunc::Normalized{});
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  auto wrap = [&](const Poly& q) {
    const std::string t = q.to_string(var);
    return t.find(' ') == std::string::npos ? t : "(" + t + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace mwlat
