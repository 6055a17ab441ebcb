#include "mwlat/algebra/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "mwlat/error.hpp"

namespace mwlat {

namespace {

bool all_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// Polynomials over a field K, coefficient blocks of length K.degree().
using Block = Coeffs;
using BlockPoly = std::vector<Block>;

void trim(BlockPoly& p) {
  while (!p.empty() && all_zero(p.back())) p.pop_back();
}

void sub_into(Block& dst, const Block& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
}

Block scalar_mul(const NumberField& k, const Block& a, const Block& b) {
  if (all_zero(a) || all_zero(b)) return Block(k.degree());
  return k.mul(a, b);
}

// r := r - c * x^shift * d
void sub_shifted(const NumberField& k, BlockPoly& r, const Block& c, std::size_t shift,
                 const BlockPoly& d) {
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (all_zero(d[j])) continue;
    sub_into(r[shift + j], k.mul(c, d[j]));
  }
}

std::pair<BlockPoly, BlockPoly> divmod(const NumberField& k, BlockPoly num, const BlockPoly& den) {
  const Block lead_inv = k.inverse(den.back());
  BlockPoly q;
  if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Block(k.degree()));
  while (!num.empty() && num.size() >= den.size()) {
    const std::size_t shift = num.size() - den.size();
    Block c = k.mul(num.back(), lead_inv);
    sub_shifted(k, num, c, shift, den);
    q[shift] = std::move(c);
    num.pop_back();
    trim(num);
  }
  trim(q);
  return {std::move(q), std::move(num)};
}

BlockPoly poly_mul(const NumberField& k, const BlockPoly& a, const BlockPoly& b) {
  if (a.empty() || b.empty()) return {};
  BlockPoly out(a.size() + b.size() - 1, Block(k.degree()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (all_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (all_zero(b[j])) continue;
      Block m = k.mul(a[i], b[j]);
      for (std::size_t l = 0; l < m.size(); ++l) out[i + j][l] += m[l];
    }
  }
  trim(out);
  return out;
}

BlockPoly poly_sub(BlockPoly a, const BlockPoly& b, std::size_t width) {
  if (a.size() < b.size()) a.resize(b.size(), Block(width));
  for (std::size_t i = 0; i < b.size(); ++i) sub_into(a[i], b[i]);
  trim(a);
  return a;
}

}  // namespace

NumberField::NumberField(FieldPtr base, std::string name, std::vector<Coeffs> modulus)
    : base_(std::move(base)), name_(std::move(name)), modulus_(std::move(modulus)) {
  if (base_) {
    relative_degree_ = modulus_.size() - 1;
    degree_ = relative_degree_ * base_->degree();
    height_ = base_->height() + 1;
  }
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = std::make_shared<const NumberField>(nullptr, "", std::vector<Coeffs>{});
  return q;
}

FieldPtr NumberField::adjoin(std::string name, const std::vector<NFElement>& modulus) const {
  if (modulus.size() < 2) throw MathError("modulus must have degree >= 1");
  std::vector<Coeffs> coeffs;
  coeffs.reserve(modulus.size());
  for (const auto& c : modulus) {
    if (c.field().get() != this)
      throw MathError("coefficient level violation: modulus for '" + name +
                      "' has coefficients outside the current tower");
    coeffs.push_back(c.rep());
  }
  if (!modulus.back().is_one())
    throw MathError("modulus for '" + name + "' is not monic");
  return std::make_shared<const NumberField>(shared_from_this(), std::move(name), std::move(coeffs));
}

std::vector<std::string> NumberField::generator_names() const {
  std::vector<std::string> names;
  for (const NumberField* f = this; f->base_; f = f->base_.get()) names.push_back(f->name_);
  std::reverse(names.begin(), names.end());
  return names;
}

FieldPtr NumberField::level(std::size_t lvl) const {
  if (lvl > height_) throw MathError("tower level out of range");
  FieldPtr f = shared_from_this();
  while (f->height() > lvl) f = f->base();
  return f;
}

bool NumberField::extends(const NumberField& other) const {
  for (const NumberField* f = this; f; f = f->base_.get())
    if (f == &other) return true;
  return false;
}

Coeffs NumberField::mul(std::span<const Rational> a, std::span<const Rational> b) const {
  if (!base_) return {a[0] * b[0]};
  const std::size_t n = relative_degree_;
  if (base_->is_rationals()) {
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
    }
    for (std::size_t k = 2 * n - 1; k-- > n;) {
      if (sgn(prod[k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(modulus_[j][0]) != 0) prod[k - n + j] -= prod[k] * modulus_[j][0];
    }
    prod.resize(n);
    return prod;
  }
  const std::size_t bd = base_->degree();
  BlockPoly pa(n), pb(n);
  for (std::size_t i = 0; i < n; ++i) {
    pa[i].assign(a.begin() + i * bd, a.begin() + (i + 1) * bd);
    pb[i].assign(b.begin() + i * bd, b.begin() + (i + 1) * bd);
  }
  BlockPoly prod = poly_mul(*base_, pa, pb);
  for (std::size_t k = prod.size(); k-- > n;) {
    if (all_zero(prod[k])) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!all_zero(modulus_[j])) sub_into(prod[k - n + j], base_->mul(prod[k], modulus_[j]));
  }
  Coeffs out(degree_);
  for (std::size_t i = 0; i < std::min(n, prod.size()); ++i)
    std::copy(prod[i].begin(), prod[i].end(), out.begin() + i * bd);
  return out;
}

Coeffs NumberField::inverse(std::span<const Rational> a) const {
  if (all_zero(a)) throw MathError("division by zero");
  if (!base_) return {1 / a[0]};
  const std::size_t bd = base_->degree();
  const NumberField& k = *base_;
  BlockPoly r0(modulus_.begin(), modulus_.end());
  BlockPoly r1(relative_degree_);
  for (std::size_t i = 0; i < relative_degree_; ++i)
    r1[i].assign(a.begin() + i * bd, a.begin() + (i + 1) * bd);
  trim(r1);
  Block one(bd);
  one[0] = 1;
  BlockPoly s0, s1{one};
  while (r1.size() > 1) {
    auto [q, r] = divmod(k, r0, r1);
    BlockPoly s2 = poly_sub(s0, poly_mul(k, q, s1), bd);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw ReducibleModulusError(height_, name_);
  const Block c = k.inverse(r1[0]);
  Coeffs out(degree_);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    Block v = scalar_mul(k, s1[i], c);
    std::copy(v.begin(), v.end(), out.begin() + i * bd);
  }
  return out;
}

FieldPtr field_tower_create(const std::vector<LevelSpec>& moduli) {
  FieldPtr f = NumberField::rationals();
  for (const auto& level : moduli) {
    std::vector<NFElement> coeffs;
    for (const auto& c : level.coeffs) {
      if (c.size() != f->degree())
        throw MathError("coefficient level violation: modulus for '" + level.name +
                        "' has a coefficient of length " + std::to_string(c.size()) +
                        ", expected " + std::to_string(f->degree()));
      coeffs.emplace_back(f, c);
    }
    f = f->adjoin(level.name, coeffs);
  }
  return f;
}

std::vector<std::size_t> flat_index_exponents(const NumberField& field, std::size_t index) {
  std::vector<std::size_t> exps;
  std::vector<std::size_t> rel;
  for (const NumberField* f = &field; f->base(); f = f->base().get()) rel.push_back(f->relative_degree());
  std::reverse(rel.begin(), rel.end());
  for (std::size_t r : rel) {
    exps.push_back(index % r);
    index /= r;
  }
  return exps;
}

// ---------------------------------------------------------------- NFElement

NFElement::NFElement(FieldPtr field) : field_(std::move(field)), rep_(field_->degree()) {}

NFElement::NFElement(FieldPtr field, const Rational& q) : NFElement(std::move(field)) { rep_[0] = q; }

NFElement::NFElement(FieldPtr field, Coeffs rep) : field_(std::move(field)), rep_(std::move(rep)) {
  if (rep_.size() != field_->degree())
    throw MathError("element representation has length " + std::to_string(rep_.size()) +
                    ", field degree is " + std::to_string(field_->degree()));
}

NFElement NFElement::generator(const FieldPtr& field, std::size_t level) {
  if (level == 0 || level > field->height()) throw MathError("no generator at tower level " + std::to_string(level));
  NFElement g(field);
  g.rep_[field->level(level - 1)->degree()] = 1;
  return g;
}

bool NFElement::is_zero() const { return all_zero(rep_); }

bool NFElement::is_one() const {
  return rep_[0] == 1 && all_zero(std::span<const Rational>(rep_).subspan(1));
}

bool NFElement::is_rational() const { return all_zero(std::span<const Rational>(rep_).subspan(1)); }

Rational NFElement::to_rational() const {
  if (!is_rational()) throw MathError("element " + to_string() + " is not rational");
  return rep_[0];
}

void NFElement::require_same_field(const NFElement& o) const {
  if (field_ != o.field_) throw MathError("number field mismatch");
}

NFElement NFElement::inverse() const { return NFElement(field_, field_->inverse(rep_)); }

NFElement NFElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  NFElement result(field_, Rational(1));
  NFElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

NFElement NFElement::embed(const FieldPtr& larger) const {
  if (larger == field_) return *this;
  if (!larger->extends(*field_)) throw MathError("target field does not extend the element's field");
  Coeffs rep(larger->degree());
  std::copy(rep_.begin(), rep_.end(), rep.begin());
  return NFElement(larger, std::move(rep));
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  for (auto& q : r.rep_) q = -q;
  return r;
}

NFElement& NFElement::operator+=(const NFElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < rep_.size(); ++i) rep_[i] += o.rep_[i];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < rep_.size(); ++i) rep_[i] -= o.rep_[i];
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& o) {
  require_same_field(o);
  if (o.is_rational()) return *this *= o.rep_[0];
  if (is_rational()) {
    const Rational q = rep_[0];
    rep_ = o.rep_;
    return *this *= q;
  }
  rep_ = field_->mul(rep_, o.rep_);
  return *this;
}

NFElement& NFElement::operator/=(const NFElement& o) {
  require_same_field(o);
  if (o.is_rational()) return *this *= (1 / o.to_rational());
  return *this *= o.inverse();
}

NFElement& NFElement::operator*=(const Rational& q) {
  for (auto& c : rep_) c *= q;
  return *this;
}

bool operator==(const NFElement& a, const NFElement& b) {
  return a.field_ == b.field_ && a.rep_ == b.rep_;
}

bool operator<(const NFElement& a, const NFElement& b) {
  return std::lexicographical_compare(a.rep_.begin(), a.rep_.end(), b.rep_.begin(), b.rep_.end());
}

std::string NFElement::to_string() const {
  if (is_zero()) return "0";
  const auto names = field_->generator_names();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    const Rational& c = rep_[i];
    if (sgn(c) == 0) continue;
    std::string mono;
    const auto exps = flat_index_exponents(*field_, i);
    for (std::size_t l = 0; l < exps.size(); ++l) {
      if (exps[l] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[l];
      if (exps[l] > 1) mono += "^" + std::to_string(exps[l]);
    }
    const Rational mag = abs(c);
    out << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mono.empty()) {
      out << mwlat::to_string(mag);
    } else {
      if (mag != 1) out << mwlat::to_string(mag) << "*";
      out << mono;
    }
    first = false;
  }
  return out.str();
}

}  // namespace mwlat
