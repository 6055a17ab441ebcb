#pragma once

#include <string>

#include "mwlat/algebra/poly.hpp"

namespace mwlat {

// A rational function num/den in canonical form: gcd(num, den) = 1 and den monic.
// Canonical form makes equality structural.
class RatFunc {
 public:
  explicit RatFunc(FieldPtr field);
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);  // normalizes; throws MathError on den = 0

  static RatFunc constant(const NFElement& c) { return RatFunc(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc inverse() const;
  RatFunc scale_variable(const NFElement& c) const;  // r(c*t)
  RatFunc embed(const FieldPtr& larger) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Normalized{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const NFElement& c);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const;

 private:
  struct Normalized {};
  RatFunc(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

RatFunc ratfunc_normalize(const Poly& num, const Poly& den);

}  // namespace mwlat
