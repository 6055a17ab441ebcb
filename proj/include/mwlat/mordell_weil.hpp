#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwlat/algebra/ratfunc.hpp"
#include "mwlat/weierstrass.hpp"

namespace mwlat {

// Shioda-Tate: rho - 2 - sum of deg * (m_v - 1). Throws MathError when negative.
long shioda_tate_rank(const FiberConfiguration& c, long rho);

// A point of y^2 = x^3 + f x + g over K(t), in the affine chart t1 = 1.
class FFPoint {
 public:
  static FFPoint zero(const FieldPtr& field);
  static FFPoint affine(RatFunc x, RatFunc y);

  bool is_zero() const { return zero_; }
  const RatFunc& x() const { return x_; }
  const RatFunc& y() const { return y_; }
  const FieldPtr& field() const { return x_.field(); }

  friend bool operator==(const FFPoint& a, const FFPoint& b);
  friend bool operator!=(const FFPoint& a, const FFPoint& b) { return !(a == b); }
  // "O" or "(x, y)".
  std::string to_string() const;

 private:
  FFPoint(bool zero, RatFunc x, RatFunc y) : zero_(zero), x_(std::move(x)), y_(std::move(y)) {}

  bool zero_;
  RatFunc x_;
  RatFunc y_;
};

bool on_curve(const WeierstrassModel& m, const FFPoint& p);
// Throws MathError unless on_curve.
void require_on_curve(const WeierstrassModel& m, const FFPoint& p, const std::string& what = "point");

FFPoint negate(const FFPoint& p);
FFPoint add_points(const WeierstrassModel& m, const FFPoint& p, const FFPoint& q);
FFPoint multiple(const WeierstrassModel& m, const FFPoint& p, long n);
// True when n*P != O for 1 <= n <= max_order. Torsion sections of a rational
// elliptic surface have order at most 6.
bool has_no_torsion_up_to(const WeierstrassModel& m, const FFPoint& p, long max_order = 6);

struct GaloisWeights {
  long w_x = 0;
  long w_y = 0;
};

// Solves 3 w_x = 2 w_y and, for every monomial t^k of f (resp. g),
// w_x = 2 w_y + k (resp. 2 w_y + k = 0) modulo p. Throws MathError when no solution exists.
GaloisWeights galois_weights(const WeierstrassModel& m, long p);

// (x(t), y(t)) -> (zeta^w_x x(zeta t), zeta^w_y y(zeta t)).
class GaloisSectionAction {
 public:
  // Checks that zeta is a primitive p-th root of unity and that the weights are
  // compatible with the model.
  GaloisSectionAction(const WeierstrassModel& m, long p, NFElement zeta);

  long p() const { return p_; }
  const NFElement& zeta() const { return zeta_; }
  long w_x() const { return w_.w_x; }
  long w_y() const { return w_.w_y; }

  FFPoint apply(const FFPoint& p) const;
  FFPoint apply(const FFPoint& p, long times) const;

 private:
  long p_;
  NFElement zeta_;
  GaloisWeights w_;
};

FFPoint apply_sigma(const GaloisSectionAction& a, const FFPoint& p);
// Sum of the p conjugates of P.
FFPoint trace(const WeierstrassModel& m, const GaloisSectionAction& a, const FFPoint& p);

// Element of Z[sigma]/(sigma^p - 1), coefficient i on sigma^i.
using SigmaCombination = std::vector<long>;

struct Recipe {
  std::string name;
  std::string expr;
};

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := integer | 'sigma' ('^' nat)? | name | 'Tr' '(' expr ')' | '(' expr ')'
// Names resolve to the seed or earlier recipes. Throws ParseError.
std::vector<SigmaCombination> evaluate_recipes(const std::string& seed_name, const std::vector<Recipe>& recipes,
                                               long p);

// Sum of c_i sigma^i P.
FFPoint combination_point(const WeierstrassModel& m, const GaloisSectionAction& a, const FFPoint& seed,
                          const SigmaCombination& c);

struct GeneratorFamily {
  std::string seed_name;
  FFPoint seed;
  std::vector<Recipe> recipes;
  long expected_count = 0;
  long shape = 0;  // deg x <= shape, deg y <= shape + 1, polynomial coordinates
};

struct FamilyReport {
  long count = 0;
  long expected_count = 0;
  long shape_violations = 0;
  long off_curve = 0;
  long sigma_fixed = 0;
  std::vector<FFPoint> points;  // canonical order: recipe order, then orbit, then negatives
  bool ok() const { return count == expected_count && shape_violations == 0 && off_curve == 0; }
};

bool matches_shape(const FFPoint& p, long shape);

// Materializes recipes, their sigma-orbits and negatives, and counts distinct points.
FamilyReport verify_generator_family(const WeierstrassModel& m, const GeneratorFamily& fam,
                                     const GaloisSectionAction& a);

}  // namespace mwlat
