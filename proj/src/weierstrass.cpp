#include "mwlat/weierstrass.hpp"

#include <algorithm>
#include <map>

#include "mwlat/error.hpp"
#include "mwlat/format.hpp"

namespace mwlat {

// ---------------------------------------------------------------- HomPoly

HomPoly::HomPoly(Poly affine, long degree) : a_(std::move(affine)), deg_(degree) {
  if (degree < 0) throw MathError("negative form degree");
  if (a_.degree() > degree)
    throw MathError("polynomial of degree " + std::to_string(a_.degree()) +
                    " does not fit a form of degree " + std::to_string(degree));
}

HomPoly HomPoly::monomial(const NFElement& c, long a, long b) {
  return HomPoly(Poly::monomial(c, static_cast<std::size_t>(a)), a + b);
}

Poly HomPoly::affine_at_infinity() const {
  if (a_.is_zero()) return a_;
  std::vector<NFElement> rev(static_cast<std::size_t>(deg_) + 1, NFElement(field()));
  for (std::size_t i = 0; i < a_.coeffs().size(); ++i) rev[static_cast<std::size_t>(deg_) - i] = a_.coeffs()[i];
  return Poly(field(), std::move(rev));
}

long HomPoly::valuation_zero() const {
  return a_.is_zero() ? kInfiniteValuation : static_cast<long>(a_.t_adic_order());
}

long HomPoly::valuation_infinity() const { return a_.is_zero() ? kInfiniteValuation : deg_ - a_.degree(); }

HomPoly HomPoly::pull_back(long p) const { return HomPoly(a_.inflate(static_cast<std::size_t>(p)), deg_ * p); }

HomPoly HomPoly::swap() const { return HomPoly(affine_at_infinity(), deg_); }

HomPoly HomPoly::substitute(const NFElement& alpha, const NFElement& beta, const NFElement& gamma,
                            const NFElement& delta) const {
  const FieldPtr& k = field();
  const Poly l1(k, std::vector<NFElement>{beta, alpha});
  const Poly l2(k, std::vector<NFElement>{delta, gamma});
  std::vector<Poly> p1{Poly::constant(NFElement(k, 1))}, p2{Poly::constant(NFElement(k, 1))};
  for (long i = 0; i < deg_; ++i) {
    p1.push_back(p1.back() * l1);
    p2.push_back(p2.back() * l2);
  }
  Poly out(k);
  for (std::size_t i = 0; i < a_.coeffs().size(); ++i) {
    if (a_.coeffs()[i].is_zero()) continue;
    out += p1[i] * p2[static_cast<std::size_t>(deg_) - i] * a_.coeffs()[i];
  }
  return HomPoly(std::move(out), deg_);
}

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
  if (a.deg_ != b.deg_) throw MathError("adding forms of different degrees");
  return HomPoly(a.a_ + b.a_, a.deg_);
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) {
  if (a.deg_ != b.deg_) throw MathError("subtracting forms of different degrees");
  return HomPoly(a.a_ - b.a_, a.deg_);
}

namespace {

std::string hom_monomial(long a, long b) {
  std::string s;
  auto add = [&](const char* v, long e) {
    if (e == 0) return;
    if (!s.empty()) s += " ";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  add("t0", a);
  add("t1", b);
  return s;
}

std::string affine_monomial(long a) {
  if (a == 0) return "";
  return a == 1 ? "t" : "t^" + std::to_string(a);
}

// Terms of a form by descending t0 exponent; `suffix` is appended to every monomial.
void append_terms(std::vector<Term>& out, const HomPoly& q, bool homogeneous, const std::string& suffix) {
  const auto& c = q.affine().coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    const long a = static_cast<long>(i);
    std::string mono = homogeneous ? hom_monomial(a, q.degree() - a) : affine_monomial(a);
    if (!suffix.empty()) mono += (mono.empty() ? "" : " ") + suffix;
    append_element_terms(out, c[i], mono);
  }
}

}  // namespace

std::string HomPoly::to_string() const {
  std::vector<Term> terms;
  append_terms(terms, *this, true, "");
  return join_terms(terms, true);
}

// ---------------------------------------------------------------- WeierstrassModel

WeierstrassModel::WeierstrassModel(HomPoly f, HomPoly g, long d) : f_(std::move(f)), g_(std::move(g)), d_(d) {
  if (d_ < 0) throw MathError("negative line bundle degree");
  if (f_.field() != g_.field()) throw MathError("f and g live over different fields");
  if (f_.degree() != 4 * d_ || g_.degree() != 6 * d_)
    throw MathError("degree inconsistency: need deg f = 4d and deg g = 6d, got " + std::to_string(f_.degree()) +
                    " and " + std::to_string(g_.degree()) + " for d = " + std::to_string(d_));
  if (discriminant(*this).is_zero()) throw MathError("singular family: discriminant vanishes identically");
}

WeierstrassModel WeierstrassModel::from_affine(const Poly& f, const Poly& g) {
  auto ceil_div = [](long a, long b) { return a <= 0 ? 0 : (a + b - 1) / b; };
  const long d = std::max(ceil_div(f.degree(), 4), ceil_div(g.degree(), 6));
  return WeierstrassModel(HomPoly(f, 4 * d), HomPoly(g, 6 * d), d);
}

bool WeierstrassModel::is_isotrivial() const {
  if (f_.is_zero() || g_.is_zero()) return true;
  const Poly f3 = f_.affine().pow(3), g2 = g_.affine().pow(2);
  return f3 * g2.lead() == g2 * f3.lead();
}

WeierstrassModel WeierstrassModel::embed(const FieldPtr& larger) const {
  return WeierstrassModel(f_.embed(larger), g_.embed(larger), d_);
}

namespace {

std::string model_string(const WeierstrassModel& m, bool homogeneous) {
  std::vector<Term> terms;
  append_terms(terms, m.f(), homogeneous, "x");
  append_terms(terms, m.g(), homogeneous, "");
  std::string rhs = "x^3";
  if (!terms.empty()) rhs += " " + join_terms(terms, false);
  return "y^2 = " + rhs;
}

}  // namespace

std::string WeierstrassModel::to_string() const { return model_string(*this, true); }
std::string WeierstrassModel::affine_string() const { return model_string(*this, false); }

// ---------------------------------------------------------------- Place

Place Place::finite(const Poly& pi) {
  if (pi.degree() < 1) throw MathError("place polynomial must be nonconstant");
  if (!pi.is_monic()) throw MathError("place polynomial must be monic");
  return Place(pi, false);
}

std::string Place::to_string() const {
  if (infinity_) return "inf";
  if (is_zero()) return "0";
  return pi_.to_string("t");
}

// ---------------------------------------------------------------- KodairaType

KodairaType KodairaType::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '_' && c != ' ') s += c;
  const bool star = !s.empty() && s.back() == '*';
  if (star) s.pop_back();
  if (s == "II") return of(star ? Kind::IIStar : Kind::II);
  if (s == "III") return of(star ? Kind::IIIStar : Kind::III);
  if (s == "IV") return of(star ? Kind::IVStar : Kind::IV);
  if (s.size() >= 2 && s[0] == 'I' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
    const int n = std::stoi(s.substr(1));
    return star ? IStar(n) : I(n);
  }
  throw ParseError("unknown Kodaira type '" + text + "'");
}

std::vector<KodairaType> KodairaType::all_up_to(long max_delta) {
  std::vector<KodairaType> out;
  for (int n = 0; n <= max_delta; ++n) out.push_back(I(n));
  for (Kind k : {Kind::II, Kind::III, Kind::IV, Kind::IVStar, Kind::IIIStar, Kind::IIStar})
    if (of(k).v_delta() <= max_delta) out.push_back(of(k));
  for (int n = 0; 6 + n <= max_delta; ++n) out.push_back(IStar(n));
  return out;
}

long KodairaType::v_delta() const {
  switch (kind_) {
    case Kind::I: return n_;
    case Kind::II: return 2;
    case Kind::III: return 3;
    case Kind::IV: return 4;
    case Kind::IStar: return 6 + n_;
    case Kind::IVStar: return 8;
    case Kind::IIIStar: return 9;
    case Kind::IIStar: return 10;
  }
  return 0;
}

long KodairaType::components() const {
  switch (kind_) {
    case Kind::I: return n_ == 0 ? 1 : n_;
    case Kind::II: return 1;
    case Kind::III: return 2;
    case Kind::IV: return 3;
    case Kind::IStar: return 5 + n_;
    case Kind::IVStar: return 7;
    case Kind::IIIStar: return 8;
    case Kind::IIStar: return 9;
  }
  return 1;
}

std::string KodairaType::name() const {
  switch (kind_) {
    case Kind::I: return "I" + std::to_string(n_);
    case Kind::II: return "II";
    case Kind::III: return "III";
    case Kind::IV: return "IV";
    case Kind::IStar: return "I" + std::to_string(n_) + "*";
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
  }
  return "?";
}

bool heavier(const KodairaType& a, const KodairaType& b) {
  if (a.v_delta() != b.v_delta()) return a.v_delta() > b.v_delta();
  return a > b;
}

KodairaType kodaira_from_valuations(long vf, long vg, long vd) {
  using K = KodairaType::Kind;
  if (vf >= 4 && vg >= 6) throw MathError("model is not minimal at this place");
  if (vd == 0) return KodairaType::I(0);
  if (vf == 0 && vg == 0) return KodairaType::I(static_cast<int>(vd));
  if (vd == 2) return KodairaType::of(K::II);
  if (vd == 3 && vf == 1) return KodairaType::of(K::III);
  if (vd == 4 && vg == 2) return KodairaType::of(K::IV);
  if (vd == 6 && vf >= 2 && vg >= 3) return KodairaType::IStar(0);
  if (vf == 2 && vg == 3 && vd > 6) return KodairaType::IStar(static_cast<int>(vd - 6));
  if (vd == 8 && vg == 4) return KodairaType::of(K::IVStar);
  if (vd == 9 && vf == 3) return KodairaType::of(K::IIIStar);
  if (vd == 10 && vf >= 4) return KodairaType::of(K::IIStar);
  auto show = [](long v) { return v == kInfiniteValuation ? std::string("inf") : std::to_string(v); };
  throw MathError("valuations (v(f), v(g), v(Delta)) = (" + show(vf) + ", " + show(vg) + ", " + show(vd) +
                  ") match no Kodaira type");
}

// ---------------------------------------------------------------- FiberConfiguration

std::optional<FiberData> FiberConfiguration::at_zero() const {
  for (const auto& f : fibers)
    if (f.place.is_zero()) return f;
  return std::nullopt;
}

std::optional<FiberData> FiberConfiguration::at_infinity() const {
  for (const auto& f : fibers)
    if (f.place.is_infinity()) return f;
  return std::nullopt;
}

std::vector<KodairaType> FiberConfiguration::remaining() const {
  std::vector<KodairaType> out;
  for (const auto& f : fibers) {
    if (f.place.is_zero() || f.place.is_infinity()) continue;
    for (long i = 0; i < f.degree(); ++i) out.push_back(f.type);
  }
  std::sort(out.begin(), out.end(), heavier);
  return out;
}

std::vector<KodairaType> FiberConfiguration::all_types() const {
  std::vector<KodairaType> out;
  for (const auto& f : fibers)
    for (long i = 0; i < f.degree(); ++i) out.push_back(f.type);
  std::sort(out.begin(), out.end(), heavier);
  return out;
}

long FiberConfiguration::weighted_delta() const {
  long s = 0;
  for (const auto& f : fibers) s += f.degree() * f.v_delta;
  return s;
}

long FiberConfiguration::trivial_lattice_excess() const {
  long s = 0;
  for (const auto& f : fibers) s += f.degree() * (f.components - 1);
  return s;
}

std::string FiberConfiguration::to_string() const {
  std::string s;
  std::map<std::string, long> seen;
  std::vector<std::string> order;
  for (const auto& t : all_types()) {
    if (!seen.count(t.name())) order.push_back(t.name());
    ++seen[t.name()];
  }
  for (const auto& name : order) {
    if (!s.empty()) s += " + ";
    if (seen[name] > 1) s += std::to_string(seen[name]) + "x";
    s += name;
  }
  return s.empty() ? "smooth" : s;
}

// ---------------------------------------------------------------- operations

HomPoly discriminant(const WeierstrassModel& m) {
  const FieldPtr& k = m.field();
  const HomPoly& f = m.f();
  const HomPoly& g = m.g();
  HomPoly inner = f * f * f * NFElement(k, 4) + g * g * NFElement(k, 27);
  return inner * NFElement(k, -16);
}

long place_valuation(const HomPoly& q, const Place& v) {
  if (q.is_zero()) throw MathError("valuation of the zero polynomial");
  if (v.is_infinity()) return q.valuation_infinity();
  if (v.is_zero()) return q.valuation_zero();
  return static_cast<long>(valuation(q.affine(), v.pi()));
}

namespace {

long val(const HomPoly& q, const Place& v) { return q.is_zero() ? kInfiniteValuation : place_valuation(q, v); }

long steps_from(long vf, long vg) {
  const long a = vf == kInfiniteValuation ? kInfiniteValuation : vf / 4;
  const long b = vg == kInfiniteValuation ? kInfiniteValuation : vg / 6;
  return std::min(a, b);
}

// Splits squarefree p by the exact order of q at its roots, capped at `cap`.
std::vector<std::pair<long, Poly>> split_by_order(const Poly& p, const Poly& q, long cap) {
  if (q.is_zero()) return {{cap, p}};
  std::vector<std::pair<long, Poly>> out;
  Poly remaining = p, deriv = q;
  for (long k = 0; k < cap && remaining.degree() > 0; ++k) {
    Poly common = gcd(remaining, deriv);
    Poly exact = exact_div(remaining, common);
    if (exact.degree() > 0) out.emplace_back(k, exact.monic());
    remaining = common;
    deriv = deriv.derivative();
  }
  if (remaining.degree() > 0) out.emplace_back(cap, remaining.monic());
  return out;
}

}  // namespace

bool is_minimal_at(const WeierstrassModel& m, const Place& v) { return minimization_steps(m, v) == 0; }

long minimization_steps(const WeierstrassModel& m, const Place& v) {
  return steps_from(val(m.f(), v), val(m.g(), v));
}

WeierstrassModel minimize_at(const WeierstrassModel& m, const Place& v) {
  const long k = minimization_steps(m, v);
  if (k == 0) return m;
  const long e = k * v.degree();
  const long d = m.d() - e;
  if (v.is_infinity())
    return WeierstrassModel(HomPoly(m.f().affine(), 4 * d), HomPoly(m.g().affine(), 6 * d), d);
  const Poly pk = v.pi().pow(static_cast<std::size_t>(k));
  const Poly p4 = pk.pow(4), p6 = pk.pow(6);
  Poly f = m.f().is_zero() ? m.f().affine() : exact_div(m.f().affine(), p4);
  Poly g = m.g().is_zero() ? m.g().affine() : exact_div(m.g().affine(), p6);
  return WeierstrassModel(HomPoly(std::move(f), 4 * d), HomPoly(std::move(g), 6 * d), d);
}

namespace {

// Product of the finite places where both v(f) >= 4 and v(g) >= 6, each to the first power.
Poly nonminimal_radical(const WeierstrassModel& m) {
  Poly h(m.field());
  Poly df = m.f().affine(), dg = m.g().affine();
  for (int i = 0; i < 4 && !df.is_zero(); ++i, df = df.derivative()) h = gcd(h, df);
  for (int i = 0; i < 6 && !dg.is_zero(); ++i, dg = dg.derivative()) h = gcd(h, dg);
  if (h.degree() <= 0) return Poly::constant(NFElement(m.field(), 1));
  return exact_div(h, gcd(h, h.derivative())).monic();
}

}  // namespace

bool is_globally_minimal(const WeierstrassModel& m) {
  return nonminimal_radical(m).degree() == 0 && is_minimal_at(m, Place::infinity(m.field()));
}

WeierstrassModel global_minimize(const WeierstrassModel& m) {
  WeierstrassModel cur = m;
  for (;;) {
    Poly r = nonminimal_radical(cur);
    if (r.degree() == 0) break;
    cur = minimize_at(cur, Place::finite(r));
  }
  return minimize_at(cur, Place::infinity(cur.field()));
}

FiberData kodaira_type(const WeierstrassModel& m, const Place& v) {
  const HomPoly delta = discriminant(m);
  FiberData fd{v, {}, val(m.f(), v), val(m.g(), v), place_valuation(delta, v), 1};
  if (fd.v_f >= 4 && fd.v_g >= 6) throw MathError("kodaira_type needs a model minimal at " + v.to_string());
  fd.type = kodaira_from_valuations(fd.v_f, fd.v_g, fd.v_delta);
  fd.components = fd.type.components();
  return fd;
}

FiberConfiguration fiber_configuration(const WeierstrassModel& m) {
  if (!is_globally_minimal(m)) throw MathError("fiber_configuration needs a globally minimal model");
  const FieldPtr& k = m.field();
  const HomPoly delta = discriminant(m);
  FiberConfiguration c;
  c.total_delta_degree = delta.degree();

  const Place zero = Place::zero(k), inf = Place::infinity(k);
  if (delta.valuation_zero() > 0) c.fibers.push_back(kodaira_type(m, zero));
  if (delta.valuation_infinity() > 0) c.fibers.push_back(kodaira_type(m, inf));

  std::vector<FiberData> rest;
  const Poly r = delta.affine().shift_down(static_cast<std::size_t>(delta.valuation_zero()));
  if (r.degree() > 0) {
    for (const auto& [mult, part] : squarefree_decomposition(r)) {
      for (const auto& [vf, pf] : split_by_order(part, m.f().affine(), 4)) {
        for (const auto& [vg, pg] : split_by_order(pf, m.g().affine(), 6)) {
          FiberData fd{Place::finite(pg), {}, 0, 0, static_cast<long>(mult), 1};
          fd.v_f = m.f().is_zero() ? kInfiniteValuation : static_cast<long>(valuation(m.f().affine(), pg));
          fd.v_g = m.g().is_zero() ? kInfiniteValuation : static_cast<long>(valuation(m.g().affine(), pg));
          fd.type = kodaira_from_valuations(fd.v_f, fd.v_g, fd.v_delta);
          fd.components = fd.type.components();
          rest.push_back(std::move(fd));
        }
      }
    }
  }
  std::sort(rest.begin(), rest.end(), [](const FiberData& a, const FiberData& b) {
    if (a.type != b.type) return heavier(a.type, b.type);
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.place.to_string() < b.place.to_string();
  });
  for (auto& f : rest) c.fibers.push_back(std::move(f));

  if (c.weighted_delta() != c.total_delta_degree)
    throw MathError("fiber valuations sum to " + std::to_string(c.weighted_delta()) + ", expected " +
                    std::to_string(c.total_delta_degree));
  return c;
}

long fundamental_degree(const WeierstrassModel& m) {
  const FiberConfiguration c = fiber_configuration(m);
  const long total = c.weighted_delta();
  if (total == 0) throw MathError("trivial family: the discriminant is constant");
  if (total % 12 != 0) throw MathError("discriminant degree " + std::to_string(total) + " is not divisible by 12");
  return total / 12;
}

WeierstrassModel move_to_zero_infinity(const WeierstrassModel& m, const std::optional<NFElement>& a,
                                       const std::optional<NFElement>& b) {
  const FieldPtr& k = m.field();
  const NFElement zero(k, 0), one(k, 1);
  NFElement al = one, be = zero, ga = zero, de = one;
  if (a && b) {
    if (*a == *b) throw MathError("the two places must be distinct");
    al = *b, be = *a, ga = one, de = one;
  } else if (a) {
    al = one, be = *a, ga = zero, de = one;
  } else if (b) {
    al = *b, be = one, ga = one, de = zero;
  } else {
    throw MathError("the two places must be distinct");
  }
  return WeierstrassModel(m.f().substitute(al, be, ga, de), m.g().substitute(al, be, ga, de), m.d());
}

WeierstrassModel swap_zero_infinity(const WeierstrassModel& m) {
  return WeierstrassModel(m.f().swap(), m.g().swap(), m.d());
}

}  // namespace mwlat
