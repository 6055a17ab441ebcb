#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mwlat/algebra/poly.hpp"

namespace mwlat {

// Valuation of the zero polynomial.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

// Binary form of a fixed degree in (t0, t1), stored through the chart t1 = 1:
// coefficient i of affine() multiplies t0^i t1^(degree - i).
class HomPoly {
 public:
  HomPoly(Poly affine, long degree);
  static HomPoly zero(const FieldPtr& field, long degree) { return HomPoly(Poly(field), degree); }
  // t0^a t1^b with coefficient c.
  static HomPoly monomial(const NFElement& c, long a, long b);

  const FieldPtr& field() const { return a_.field(); }
  long degree() const { return deg_; }
  const Poly& affine() const { return a_; }
  // The chart t0 = 1, as a polynomial in s = t1/t0.
  Poly affine_at_infinity() const;
  NFElement coeff(long t0_exponent) const { return a_.coeff(static_cast<std::size_t>(t0_exponent)); }
  bool is_zero() const { return a_.is_zero(); }

  long valuation_zero() const;      // order of t0, kInfiniteValuation for zero
  long valuation_infinity() const;  // order of t1, kInfiniteValuation for zero

  // t0 -> t0^p, t1 -> t1^p.
  HomPoly pull_back(long p) const;
  // t0 <-> t1.
  HomPoly swap() const;
  // t0 = alpha*s0 + beta*s1, t1 = gamma*s0 + delta*s1.
  HomPoly substitute(const NFElement& alpha, const NFElement& beta, const NFElement& gamma,
                     const NFElement& delta) const;
  HomPoly embed(const FieldPtr& larger) const { return HomPoly(a_.embed(larger), deg_); }

  HomPoly operator-() const { return HomPoly(-a_, deg_); }
  friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator-(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b) { return HomPoly(a.a_ * b.a_, a.deg_ + b.deg_); }
  friend HomPoly operator*(const HomPoly& a, const NFElement& c) { return HomPoly(a.a_ * c, a.deg_); }
  friend bool operator==(const HomPoly& a, const HomPoly& b) { return a.deg_ == b.deg_ && a.a_ == b.a_; }

  // Terms by descending t0 exponent, e.g. "-t0^3 t1"; "0" for zero.
  std::string to_string() const;

 private:
  Poly a_;
  long deg_;
};

// y^2 = x^3 + f x + g with deg f = 4d, deg g = 6d.
class WeierstrassModel {
 public:
  WeierstrassModel(HomPoly f, HomPoly g, long d);
  // Homogenizes affine data in t = t0/t1 with the smallest consistent d.
  static WeierstrassModel from_affine(const Poly& f, const Poly& g);

  const HomPoly& f() const { return f_; }
  const HomPoly& g() const { return g_; }
  long d() const { return d_; }
  const FieldPtr& field() const { return f_.field(); }

  // Constant j-invariant (f = 0 or g = 0, or f^3/g^2 constant).
  bool is_isotrivial() const;
  WeierstrassModel embed(const FieldPtr& larger) const;

  // "y^2 = x^3 - t0^3 t1 x + t0^4 t1^2"
  std::string to_string() const;
  // "y^2 = x^3 - t^3 x + t^2" in the chart t1 = 1.
  std::string affine_string() const;

  friend bool operator==(const WeierstrassModel& a, const WeierstrassModel& b) {
    return a.d_ == b.d_ && a.f_ == b.f_ && a.g_ == b.g_;
  }

 private:
  HomPoly f_, g_;
  long d_;
};

// A place of the base line: a monic irreducible pi(t), or infinity. Squarefree
// reducible pi stand for a group of places sharing the same local data.
class Place {
 public:
  static Place zero(const FieldPtr& field) { return Place(Poly::variable(field), false); }
  static Place infinity(const FieldPtr& field) { return Place(Poly::variable(field), true); }
  static Place finite(const Poly& pi);

  bool is_infinity() const { return infinity_; }
  bool is_zero() const { return !infinity_ && pi_.degree() == 1 && pi_.coeff(0).is_zero(); }
  const Poly& pi() const { return pi_; }
  long degree() const { return infinity_ ? 1 : pi_.degree(); }
  // "0", "inf", or the polynomial in t.
  std::string to_string() const;

 private:
  Place(Poly pi, bool infinity) : pi_(std::move(pi)), infinity_(infinity) {}
  Poly pi_;
  bool infinity_;
};

class KodairaType {
 public:
  enum class Kind { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

  KodairaType() = default;
  static KodairaType I(int n) { return KodairaType(Kind::I, n); }
  static KodairaType IStar(int n) { return KodairaType(Kind::IStar, n); }
  static KodairaType of(Kind k) { return KodairaType(k, 0); }
  // Accepts "I0", "I5", "I_5", "II", "I0*", "I2*", "IV*", ...
  static KodairaType parse(const std::string& text);
  // Every type with v(Delta) <= max_delta.
  static std::vector<KodairaType> all_up_to(long max_delta);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  long v_delta() const;
  long components() const;
  bool is_singular() const { return !(kind_ == Kind::I && n_ == 0); }
  bool is_multiplicative() const { return kind_ == Kind::I && n_ > 0; }
  bool is_additive() const { return kind_ != Kind::I; }
  std::string name() const;

  friend auto operator<=>(const KodairaType&, const KodairaType&) = default;

 private:
  KodairaType(Kind k, int n) : kind_(k), n_(n) {}
  Kind kind_ = Kind::I;
  int n_ = 0;
};

// Heavier first: by v(Delta), then by kind.
bool heavier(const KodairaType& a, const KodairaType& b);

// Standard char-0 table on minimal data. Throws MathError on non-minimal data or no match.
KodairaType kodaira_from_valuations(long v_f, long v_g, long v_delta);

struct FiberData {
  Place place;
  KodairaType type;
  long v_f = 0;
  long v_g = 0;
  long v_delta = 0;
  long components = 1;
  long degree() const { return place.degree(); }
};

struct FiberConfiguration {
  std::vector<FiberData> fibers;  // places with v(Delta) > 0: 0, inf, then the rest
  long total_delta_degree = 0;

  std::optional<FiberData> at_zero() const;
  std::optional<FiberData> at_infinity() const;
  // Fibers away from 0 and inf, one entry per geometric fiber, heaviest first.
  std::vector<KodairaType> remaining() const;
  // Every geometric fiber, heaviest first.
  std::vector<KodairaType> all_types() const;
  long weighted_delta() const;
  // Sum of degree * (m_v - 1).
  long trivial_lattice_excess() const;
  // "IV* + III + I1"
  std::string to_string() const;
};

HomPoly discriminant(const WeierstrassModel& m);
long place_valuation(const HomPoly& q, const Place& v);  // throws on q = 0

bool is_minimal_at(const WeierstrassModel& m, const Place& v);
long minimization_steps(const WeierstrassModel& m, const Place& v);
WeierstrassModel minimize_at(const WeierstrassModel& m, const Place& v);
bool is_globally_minimal(const WeierstrassModel& m);
WeierstrassModel global_minimize(const WeierstrassModel& m);

FiberData kodaira_type(const WeierstrassModel& m, const Place& v);
FiberConfiguration fiber_configuration(const WeierstrassModel& m);
long fundamental_degree(const WeierstrassModel& m);

// Coordinate change sending the rational point a to 0 and b to infinity
// (std::nullopt stands for infinity).
WeierstrassModel move_to_zero_infinity(const WeierstrassModel& m, const std::optional<NFElement>& a,
                                       const std::optional<NFElement>& b);
WeierstrassModel swap_zero_infinity(const WeierstrassModel& m);

}  // namespace mwlat
