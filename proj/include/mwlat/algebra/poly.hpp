#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mwlat/algebra/number_field.hpp"

namespace mwlat {

// Dense univariate polynomial over a number field, low degree first.
// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<NFElement> coeffs);
  Poly(FieldPtr field, const std::vector<Rational>& coeffs);

  static Poly constant(const NFElement& c);
  static Poly monomial(const NFElement& c, std::size_t degree);
  // The variable t.
  static Poly variable(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<NFElement>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  NFElement coeff(std::size_t i) const;
  const NFElement& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly monic() const;
  Poly derivative() const;
  NFElement eval(const NFElement& x) const;
  // p(c*t): coefficient i scaled by c^i.
  Poly scale_variable(const NFElement& c) const;
  // p(t^k).
  Poly inflate(std::size_t k) const;
  Poly pow(std::size_t e) const;
  Poly embed(const FieldPtr& larger) const;
  // Order of t dividing p (p != 0).
  std::size_t t_adic_order() const;
  Poly shift_down(std::size_t k) const;  // p / t^k, requires t^k | p

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const NFElement& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const NFElement& c) { return a *= c; }
  friend Poly operator*(const NFElement& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<NFElement> c_;
};

// Quotient and remainder; throws MathError when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Exact division; throws MathError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Largest e with pi^e | q. pi must be nonconstant, q nonzero.
std::size_t valuation(const Poly& q, const Poly& pi);
// Square-free decomposition: returns (k, P_k) pairs with q = c * prod P_k^k, P_k monic squarefree, pairwise coprime.
std::vector<std::pair<std::size_t, Poly>> squarefree_decomposition(const Poly& q);

}  // namespace mwlat
