#include "mwlat/mordell_weil.hpp"

#include <cctype>
#include <map>

#include "mwlat/error.hpp"

namespace mwlat {

long shioda_tate_rank(const FiberConfiguration& c, long rho) {
  const long r = rho - 2 - c.trivial_lattice_excess();
  if (r < 0)
    throw MathError("Shioda-Tate: rho = " + std::to_string(rho) + " is too small for configuration " + c.to_string());
  return r;
}

// ---------------------------------------------------------------- points

FFPoint FFPoint::zero(const FieldPtr& field) { return FFPoint(true, RatFunc(field), RatFunc(field)); }

FFPoint FFPoint::affine(RatFunc x, RatFunc y) {
  if (x.field() != y.field()) throw MathError("point coordinates over different fields");
  return FFPoint(false, std::move(x), std::move(y));
}

bool operator==(const FFPoint& a, const FFPoint& b) {
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

std::string FFPoint::to_string() const {
  if (zero_) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

namespace {

RatFunc affine_f(const WeierstrassModel& m) { return RatFunc(m.f().affine()); }
RatFunc affine_g(const WeierstrassModel& m) { return RatFunc(m.g().affine()); }

long mod(long a, long p) { return ((a % p) + p) % p; }

}  // namespace

bool on_curve(const WeierstrassModel& m, const FFPoint& p) {
  if (p.is_zero()) return true;
  if (p.field() != m.field()) return false;
  const RatFunc& x = p.x();
  return p.y() * p.y() == x * x * x + affine_f(m) * x + affine_g(m);
}

void require_on_curve(const WeierstrassModel& m, const FFPoint& p, const std::string& what) {
  if (!on_curve(m, p)) throw MathError(what + " is not on " + m.affine_string());
}

FFPoint negate(const FFPoint& p) {
  if (p.is_zero()) return p;
  return FFPoint::affine(p.x(), -p.y());
}

FFPoint add_points(const WeierstrassModel& m, const FFPoint& p, const FFPoint& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  RatFunc lambda(m.field());
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y().is_zero()) return FFPoint::zero(m.field());
    const NFElement three(m.field(), 3), two(m.field(), 2);
    lambda = (p.x() * p.x() * three + affine_f(m)) / (p.y() * two);
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  RatFunc x3 = lambda * lambda - p.x() - q.x();
  RatFunc y3 = lambda * (p.x() - x3) - p.y();
  return FFPoint::affine(std::move(x3), std::move(y3));
}

FFPoint multiple(const WeierstrassModel& m, const FFPoint& p, long n) {
  FFPoint base = n < 0 ? negate(p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  FFPoint acc = FFPoint::zero(m.field());
  while (k > 0) {
    if (k & 1) acc = add_points(m, acc, base);
    k >>= 1;
    if (k > 0) base = add_points(m, base, base);
  }
  return acc;
}

bool has_no_torsion_up_to(const WeierstrassModel& m, const FFPoint& p, long max_order) {
  FFPoint acc = FFPoint::zero(m.field());
  for (long n = 1; n <= max_order; ++n) {
    acc = add_points(m, acc, p);
    if (acc.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Galois action

GaloisWeights galois_weights(const WeierstrassModel& m, long p) {
  if (p < 2) throw MathError("galois_weights: p must be at least 2");
  std::vector<long> fk, gk;
  const auto& fa = m.f().affine().coeffs();
  const auto& ga = m.g().affine().coeffs();
  for (std::size_t k = 0; k < fa.size(); ++k)
    if (!fa[k].is_zero()) fk.push_back(static_cast<long>(k));
  for (std::size_t k = 0; k < ga.size(); ++k)
    if (!ga[k].is_zero()) gk.push_back(static_cast<long>(k));
  std::optional<GaloisWeights> found;
  for (long wx = 0; wx < p; ++wx) {
    for (long wy = 0; wy < p; ++wy) {
      bool ok = mod(3 * wx - 2 * wy, p) == 0;
      for (long k : fk) ok = ok && mod(2 * wy + k - wx, p) == 0;
      for (long k : gk) ok = ok && mod(2 * wy + k, p) == 0;
      if (!ok) continue;
      if (found) throw MathError("galois_weights: weights are not unique for " + m.affine_string());
      found = GaloisWeights{wx, wy};
    }
  }
  if (!found)
    throw MathError("galois_weights: " + m.affine_string() + " admits no action of order " + std::to_string(p));
  return *found;
}

GaloisSectionAction::GaloisSectionAction(const WeierstrassModel& m, long p, NFElement zeta)
    : p_(p), zeta_(std::move(zeta)), w_(galois_weights(m, p)) {
  if (zeta_.field() != m.field()) throw MathError("zeta lies outside the model's field");
  if (!zeta_.pow(p).is_one() || zeta_.is_one()) throw MathError("zeta is not a primitive root of unity of order " + std::to_string(p));
}

FFPoint GaloisSectionAction::apply(const FFPoint& p) const {
  if (p.is_zero()) return p;
  return FFPoint::affine(p.x().scale_variable(zeta_) * zeta_.pow(w_.w_x),
                         p.y().scale_variable(zeta_) * zeta_.pow(w_.w_y));
}

FFPoint GaloisSectionAction::apply(const FFPoint& p, long times) const {
  times = mod(times, p_);
  if (times == 0 || p.is_zero()) return p;
  const NFElement z = zeta_.pow(times);
  return FFPoint::affine(p.x().scale_variable(z) * z.pow(w_.w_x), p.y().scale_variable(z) * z.pow(w_.w_y));
}

FFPoint apply_sigma(const GaloisSectionAction& a, const FFPoint& p) { return a.apply(p); }

FFPoint trace(const WeierstrassModel& m, const GaloisSectionAction& a, const FFPoint& p) {
  FFPoint acc = p;
  for (long i = 1; i < a.p(); ++i) acc = add_points(m, acc, a.apply(p, i));
  return acc;
}

// ---------------------------------------------------------------- recipes

namespace {

class RecipeParser {
 public:
  RecipeParser(const std::string& text, long p, const std::map<std::string, SigmaCombination>& names)
      : s_(text), p_(p), names_(names) {}

  SigmaCombination parse() {
    SigmaCombination v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("recipe '" + s_ + "': " + msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  SigmaCombination unit(long c, long shift) const {
    SigmaCombination v(static_cast<std::size_t>(p_), 0);
    v[static_cast<std::size_t>(mod(shift, p_))] = c;
    return v;
  }

  SigmaCombination mul(const SigmaCombination& a, const SigmaCombination& b) const {
    SigmaCombination r(static_cast<std::size_t>(p_), 0);
    for (long i = 0; i < p_; ++i)
      for (long j = 0; j < p_; ++j) r[static_cast<std::size_t>((i + j) % p_)] += a[i] * b[j];
    return r;
  }

  SigmaCombination expr() {
    skip();
    long sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    SigmaCombination acc = term();
    for (auto& c : acc) c *= sign;
    while (true) {
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else break;
      SigmaCombination t = term();
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += sign * t[k];
    }
    return acc;
  }

  SigmaCombination term() {
    SigmaCombination acc = factor();
    while (accept('*')) acc = mul(acc, factor());
    return acc;
  }

  long number() {
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return std::stol(s_.substr(start, i_ - start));
  }

  SigmaCombination factor() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of recipe");
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) return unit(number(), 0);
    if (accept('(')) {
      SigmaCombination v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    const std::string id = s_.substr(start, i_ - start);
    if (id.empty()) fail("expected a factor");
    if (id == "sigma") {
      long e = 1;
      if (accept('^')) {
        skip();
        e = number();
      }
      return unit(1, e);
    }
    if (id == "Tr") {
      if (!accept('(')) fail("expected '(' after Tr");
      SigmaCombination v = expr();
      if (!accept(')')) fail("expected ')'");
      SigmaCombination norm(static_cast<std::size_t>(p_), 1);
      return mul(norm, v);
    }
    auto it = names_.find(id);
    if (it == names_.end()) {
      i_ = start;
      fail("undefined symbol '" + id + "'");
    }
    return it->second;
  }

  const std::string& s_;
  long p_;
  const std::map<std::string, SigmaCombination>& names_;
  std::size_t i_ = 0;
};

}  // namespace

std::vector<SigmaCombination> evaluate_recipes(const std::string& seed_name, const std::vector<Recipe>& recipes,
                                               long p) {
  std::map<std::string, SigmaCombination> names;
  SigmaCombination seed(static_cast<std::size_t>(p), 0);
  seed[0] = 1;
  names[seed_name] = seed;
  std::vector<SigmaCombination> out;
  for (const auto& r : recipes) {
    if (names.count(r.name)) throw ParseError("recipe name '" + r.name + "' defined twice");
    SigmaCombination v = RecipeParser(r.expr, p, names).parse();
    names[r.name] = v;
    out.push_back(std::move(v));
  }
  return out;
}

FFPoint combination_point(const WeierstrassModel& m, const GaloisSectionAction& a, const FFPoint& seed,
                          const SigmaCombination& c) {
  FFPoint acc = FFPoint::zero(m.field());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    acc = add_points(m, acc, multiple(m, a.apply(seed, static_cast<long>(i)), c[i]));
  }
  return acc;
}

bool matches_shape(const FFPoint& p, long shape) {
  if (p.is_zero()) return false;
  return p.x().is_polynomial() && p.y().is_polynomial() && p.x().num().degree() <= shape &&
         p.y().num().degree() <= shape + 1;
}

FamilyReport verify_generator_family(const WeierstrassModel& m, const GeneratorFamily& fam,
                                     const GaloisSectionAction& a) {
  require_on_curve(m, fam.seed, "seed " + fam.seed_name);
  const auto combos = evaluate_recipes(fam.seed_name, fam.recipes, a.p());

  FamilyReport rep;
  rep.expected_count = fam.expected_count;
  auto insert = [&](const FFPoint& q) {
    for (const auto& existing : rep.points)
      if (existing == q) return;
    rep.points.push_back(q);
  };
  std::vector<FFPoint> roots{fam.seed};
  for (const auto& c : combos) roots.push_back(combination_point(m, a, fam.seed, c));
  for (const auto& r : roots) {
    for (long j = 0; j < a.p(); ++j) {
      FFPoint q = a.apply(r, j);
      insert(q);
      insert(negate(q));
    }
  }
  for (const auto& q : rep.points) {
    if (!on_curve(m, q)) ++rep.off_curve;
    if (!matches_shape(q, fam.shape)) ++rep.shape_violations;
    if (a.apply(q) == q) ++rep.sigma_fixed;
  }
  rep.count = static_cast<long>(rep.points.size());
  return rep;
}

}  // namespace mwlat
