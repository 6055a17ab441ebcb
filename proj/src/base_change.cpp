#include "mwlat/base_change.hpp"

#include "mwlat/error.hpp"

namespace mwlat {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long epsilon_degree(const WeierstrassModel& m) {
  if (!is_globally_minimal(m)) throw MathError("epsilon needs a globally minimal model");
  const HomPoly delta = discriminant(m);
  const long eps = 12 * m.d() - delta.valuation_zero() - delta.valuation_infinity();
  if (eps < 0) throw MathError("negative epsilon");
  return eps;
}

WeierstrassModel pull_back(const WeierstrassModel& m, long p) {
  if (p < 1) throw MathError("cover degree must be positive");
  return WeierstrassModel(m.f().pull_back(p), m.g().pull_back(p), m.d() * p);
}

BaseChangeReport analyze_base_change(const WeierstrassModel& m, long p, bool allow_small_p) {
  if (!is_prime(p) || (p < 5 && !allow_small_p)) throw MathError("cover degree must be a prime >= 5");
  if (!is_globally_minimal(m)) throw MathError("base change needs a globally minimal model");
  const FieldPtr& k = m.field();
  const Place zero = Place::zero(k), inf = Place::infinity(k);

  BaseChangeReport r{p, m, pull_back(m, p), m, fiber_configuration(m), {}, 0, 0, 0, 0, 0, false, {}};
  r.epsilon = epsilon_degree(m);
  r.degree_before = m.d();
  r.steps_zero = minimization_steps(r.pulled_back, zero);
  r.steps_infinity = minimization_steps(r.pulled_back, inf);
  r.after = global_minimize(r.pulled_back);
  r.degree_after = r.after.d();
  if (r.degree_after != p * m.d() - r.steps_zero - r.steps_infinity)
    throw MathError("pull-back became non-minimal away from the branch points");
  r.config_after = fiber_configuration(r.after);

  const HomPoly delta = discriminant(r.after);
  const long v0 = delta.valuation_zero(), vinf = delta.valuation_infinity();
  if (12 * r.degree_after != v0 + vinf + p * r.epsilon)
    throw MathError("line bundle identity failed: 12 deg L' = " + std::to_string(12 * r.degree_after) +
                    " but v0' + vinf' + p eps = " + std::to_string(v0 + vinf + p * r.epsilon));
  r.l_stable = r.degree_after == r.degree_before;

  long away_after = 0;
  for (const auto& fd : r.config_before.fibers) {
    FiberTransition tr{fd, {}, 1};
    if (fd.place.is_zero()) {
      tr.after = kodaira_type(r.after, zero).type;
    } else if (fd.place.is_infinity()) {
      tr.after = kodaira_type(r.after, inf).type;
    } else {
      const Place above = Place::finite(fd.place.pi().inflate(static_cast<std::size_t>(p)));
      const FiberData fa = kodaira_type(r.after, above);
      tr.after = fa.type;
      tr.copies = p;
      away_after += above.degree() * fa.v_delta;
    }
    r.transitions.push_back(std::move(tr));
  }
  if (away_after != p * r.epsilon) throw MathError("Euler number bookkeeping failed away from the branch points");
  return r;
}

TransitionResult transition_type(const KodairaType& t, long p, bool ramified) {
  using K = KodairaType::Kind;
  if (!ramified) return {t, p};
  if (p % 2 == 0 || p % 3 == 0) throw MathError("transition table needs p coprime to 6");
  switch (t.kind()) {
    case K::I: return {KodairaType::I(static_cast<int>(p * t.n())), 1};
    case K::IStar: return {KodairaType::IStar(static_cast<int>(p * t.n())), 1};
    default: break;
  }
  switch ((p * t.v_delta()) % 12) {
    case 2: return {KodairaType::of(K::II), 1};
    case 3: return {KodairaType::of(K::III), 1};
    case 4: return {KodairaType::of(K::IV), 1};
    case 8: return {KodairaType::of(K::IVStar), 1};
    case 9: return {KodairaType::of(K::IIIStar), 1};
    case 10: return {KodairaType::of(K::IIStar), 1};
    default: throw MathError("no transition for " + t.name());
  }
}

WeierstrassModel local_realization(const KodairaType& t) {
  using K = KodairaType::Kind;
  const FieldPtr q = NumberField::rationals();
  auto poly = [&](std::vector<Rational> c) { return Poly(q, c); };
  auto mono = [&](Rational c, std::size_t e) { return Poly::monomial(NFElement(q, c), e); };
  Poly f(q), g(q);
  switch (t.kind()) {
    case K::I:
      if (t.n() == 0) {
        g = poly({1, 1});
      } else {
        f = poly({-3});
        g = poly({2}) + mono(1, static_cast<std::size_t>(t.n()));
      }
      break;
    case K::IStar:
      f = mono(-3, 2);
      g = (poly({2}) + mono(1, static_cast<std::size_t>(t.n()))) * mono(1, 3);
      break;
    case K::II: g = mono(1, 1); break;
    case K::III: f = mono(1, 1); break;
    case K::IV: g = mono(1, 2); break;
    case K::IVStar: g = mono(1, 4); break;
    case K::IIIStar: f = mono(1, 3); break;
    case K::IIStar: g = mono(1, 5); break;
  }
  WeierstrassModel m = WeierstrassModel::from_affine(f, g);
  if (kodaira_type(m, Place::zero(q)).type != t) throw MathError("realization of " + t.name() + " is wrong");
  return m;
}

TransitionResult transition_type_pipeline(const KodairaType& t, long p, bool ramified) {
  WeierstrassModel m = local_realization(t);
  const FieldPtr& k = m.field();
  if (ramified) {
    WeierstrassModel after = global_minimize(pull_back(m, p));
    return {kodaira_type(after, Place::zero(k)).type, 1};
  }
  // Put the fiber at t = 1 (t -> t - 1), then look above it at t^p = 1.
  const NFElement one(k, 1), zero(k, 0);
  WeierstrassModel shifted(m.f().substitute(one, -one, zero, one), m.g().substitute(one, -one, zero, one), m.d());
  WeierstrassModel after = global_minimize(pull_back(shifted, p));
  Poly above = Poly::monomial(one, static_cast<std::size_t>(p)) - Poly::constant(one);
  FiberData fd = kodaira_type(after, Place::finite(above));
  return {fd.type, fd.degree()};
}

}  // namespace mwlat
