#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "mwlat/algebra/rational.hpp"

namespace mwlat {

class NumberField;
class NFElement;
struct ModularPrime;
using FieldPtr = std::shared_ptr<const NumberField>;
using Coeffs = std::vector<Rational>;

// A tower Q = F_0 ⊂ F_1 ⊂ ... ⊂ F_h, each F_i = F_{i-1}[x]/(m_i(x)) with m_i monic.
// Irreducibility of the m_i is the caller's contract: a zero divisor found during
// inversion raises ReducibleModulusError naming the offending level.
//
// Elements are stored as flat coefficient vectors of length degree(), nested
// little-endian: the flat index i0 + D_0*(i1 + D_1*(...)) addresses the monomial
// g_1^i0 * g_2^i1 * ... in the level generators.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static FieldPtr rationals();

  // Adjoins a root (called `name`) of `modulus`, given low-degree-first over this field.
  FieldPtr adjoin(std::string name, const std::vector<NFElement>& modulus) const;

  std::size_t degree() const { return degree_; }
  std::size_t relative_degree() const { return relative_degree_; }
  std::size_t height() const { return height_; }
  bool is_rationals() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  const std::string& name() const { return name_; }
  const std::vector<Coeffs>& modulus() const { return modulus_; }

  // Generator names from the bottom level up.
  std::vector<std::string> generator_names() const;
  // The field at level `level` (0 = Q) of this tower.
  FieldPtr level(std::size_t level) const;
  bool extends(const NumberField& other) const;

  // Raw arithmetic on flat representations of length degree().
  Coeffs mul(std::span<const Rational> a, std::span<const Rational> b) const;
  Coeffs inverse(std::span<const Rational> a) const;

  NumberField(FieldPtr base, std::string name, std::vector<Coeffs> modulus);

 private:
  friend std::shared_ptr<const ModularPrime> modular_prime(const NumberField&, std::size_t);
  mutable std::mutex primes_mu_;
  mutable std::vector<std::shared_ptr<const ModularPrime>> primes_;
  mutable std::uint64_t prime_cursor_ = 0;

  FieldPtr base_;
  std::string name_;
  std::vector<Coeffs> modulus_;  // monic; entry j is the coefficient of x^j over base_
  std::size_t relative_degree_ = 1;
  std::size_t degree_ = 1;
  std::size_t height_ = 0;
};

// Builds a tower from raw moduli; moduli[i][j] is coefficient j of level i+1's
// modulus, expressed as a flat vector over level i (so of length deg F_i).
struct LevelSpec {
  std::string name;
  std::vector<Coeffs> coeffs;
};
FieldPtr field_tower_create(const std::vector<LevelSpec>& moduli);

class NFElement {
 public:
  explicit NFElement(FieldPtr field);
  NFElement(FieldPtr field, const Rational& q);
  NFElement(FieldPtr field, long q) : NFElement(std::move(field), Rational(q)) {}
  NFElement(FieldPtr field, Coeffs rep);

  // Generator of tower level `level` (1-based), as an element of `field`.
  static NFElement generator(const FieldPtr& field, std::size_t level);
  static NFElement generator(const FieldPtr& field) { return generator(field, field->height()); }

  const FieldPtr& field() const { return field_; }
  const Coeffs& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws unless is_rational()

  NFElement inverse() const;
  NFElement pow(long exponent) const;
  // Re-express in a tower that extends this element's field.
  NFElement embed(const FieldPtr& larger) const;

  NFElement operator-() const;
  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  NFElement& operator*=(const NFElement& o);
  NFElement& operator/=(const NFElement& o);
  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator/(NFElement a, const NFElement& b) { return a /= b; }
  NFElement& operator*=(const Rational& q);
  friend NFElement operator*(NFElement a, const Rational& q) { return a *= q; }
  friend NFElement operator*(const Rational& q, NFElement a) { return a *= q; }

  friend bool operator==(const NFElement& a, const NFElement& b);
  friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

  // Total order on representations; only meaningful for canonical sorting.
  friend bool operator<(const NFElement& a, const NFElement& b);

  // Human-readable form, e.g. "3/2 + 2*z^2*r".
  std::string to_string() const;

 private:
  void require_same_field(const NFElement& o) const;

  FieldPtr field_;
  Coeffs rep_;
};

// Monomial decomposition of a flat index into per-level exponents.
std::vector<std::size_t> flat_index_exponents(const NumberField& field, std::size_t index);

}  // namespace mwlat
