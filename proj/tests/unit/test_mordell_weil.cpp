#include <cmath>
#include <complex>
#include <optional>
#include <random>

#include "doctest.h"
#include "mwlat/error.hpp"
#include "mwlat/io/fixture.hpp"
#include "mwlat/io/parse.hpp"
#include "mwlat/mordell_weil.hpp"

using namespace mwlat;

namespace {

const Fixture& p5() {
  static const Fixture fx = load_named_fixture("ell34_p5");
  return fx;
}

const Fixture& p7() {
  static const Fixture fx = load_named_fixture("ell7_p7");
  return fx;
}

RatFunc rf(const std::string& text, const FieldPtr& field) { return RatFunc(parse_poly(text, field)); }

// Random members of the fixture's closed generator family.
std::vector<FFPoint> random_points(const Fixture& fx, std::size_t count, unsigned seed) {
  const auto rep = verify_generator_family(fx.model, fx.family, fx.action());
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, rep.points.size() - 1);
  std::vector<FFPoint> out;
  while (out.size() < count) out.push_back(rep.points[pick(rng)]);
  return out;
}

using C = std::complex<double>;

// Complex embedding r -> 2^(1/5), z -> exp(2 pi i / 5) of the degree-20 tower.
C embed(const NFElement& a) {
  const C r(std::pow(2.0, 0.2), 0.0);
  const C z = std::polar(1.0, 2 * M_PI / 5);
  C out = 0;
  for (std::size_t i = 0; i < a.rep().size(); ++i) {
    auto e = flat_index_exponents(*a.field(), i);
    out += a.rep()[i].get_d() * std::pow(r, static_cast<int>(e[0])) * std::pow(z, static_cast<int>(e[1]));
  }
  return out;
}

C eval(const Poly& p, C t) {
  C acc = 0;
  for (long i = p.degree(); i >= 0; --i) acc = acc * t + embed(p.coeff(static_cast<std::size_t>(i)));
  return acc;
}

C eval(const RatFunc& f, C t) { return eval(f.num(), t) / eval(f.den(), t); }

// Floating-point chord-tangent sum of the five conjugates of (-r^2 t, t - r t^2).
std::pair<C, C> numeric_trace(C t) {
  const C f = -t * t * t;
  std::optional<std::pair<C, C>> acc;
  for (int k = 0; k < 5; ++k) {
    const C rk = std::pow(2.0, 0.2) * std::polar(1.0, 2 * M_PI * k / 5);
    std::pair<C, C> q{-rk * rk * t, t - rk * t * t};
    if (!acc) {
      acc = q;
      continue;
    }
    auto [x1, y1] = *acc;
    auto [x2, y2] = q;
    const C l = std::abs(x1 - x2) < 1e-12 ? (3.0 * x1 * x1 + f) / (2.0 * y1) : (y2 - y1) / (x2 - x1);
    const C x3 = l * l - x1 - x2;
    acc = std::pair<C, C>{x3, l * (x1 - x3) - y1};
  }
  return *acc;
}

}  // namespace

TEST_CASE("Shioda-Tate ranks") {
  CHECK(shioda_tate_rank(fiber_configuration(parse_model("y^2 = x^3 - t0^3 t1 x + t0^4 t1^2")), 10) == 1);
  CHECK(shioda_tate_rank(fiber_configuration(parse_model("y^2 = x^3 - t^3 x + t")), 10) == 7);
  CHECK(shioda_tate_rank(fiber_configuration(parse_model("y^2 = x^3 - t^3 x + t^2")), 10) == 5);
  CHECK(shioda_tate_rank(fiber_configuration(parse_model("y^2 = x^3 + t0^5 t1")), 10) == 0);
  CHECK_THROWS_AS(shioda_tate_rank(fiber_configuration(parse_model("y^2 = x^3 + t0^5 t1")), 9), MathError);
}

TEST_CASE("fixtures load and validate") {
  CHECK(p5().field->degree() == 20);
  CHECK(p7().field->degree() == 6);
  CHECK(on_curve(p5().model, p5().family.seed));
  CHECK(on_curve(p7().model, p7().family.seed));
  CHECK_THROWS_AS(load_named_fixture("no_such_fixture"), FixtureError);
}

TEST_CASE("group law basics") {
  const auto& fx = p5();
  const auto& m = fx.model;
  const FFPoint& q = fx.family.seed;
  const FFPoint o = FFPoint::zero(fx.field);
  CHECK(add_points(m, q, o) == q);
  CHECK(add_points(m, o, q) == q);
  CHECK(add_points(m, q, negate(q)).is_zero());
  CHECK(multiple(m, q, 0).is_zero());
  CHECK(multiple(m, q, -2) == negate(add_points(m, q, q)));
  CHECK(on_curve(m, multiple(m, q, 3)));
  // 2-torsion: (0, 0) on y^2 = x^3 + t x.
  auto tors = parse_model("y^2 = x^3 + t x");
  FFPoint t2 = FFPoint::affine(RatFunc(tors.field()), RatFunc(tors.field()));
  CHECK(add_points(tors, t2, t2).is_zero());
  CHECK(!has_no_torsion_up_to(tors, t2));
  CHECK(has_no_torsion_up_to(m, q));
}

TEST_CASE("Galois weights") {
  auto w5 = galois_weights(parse_model("y^2 = x^3 - t^3 x + t^2"), 5);
  CHECK(w5.w_x == 1);
  CHECK(w5.w_y == 4);
  auto w7 = galois_weights(parse_model("y^2 = x^3 - t^3 x + t"), 7);
  CHECK(w7.w_x == 2);
  CHECK(w7.w_y == 3);
  CHECK_THROWS_AS(galois_weights(parse_model("y^2 = x^3 + t x + t"), 5), MathError);
  const auto& fx = p5();
  CHECK_THROWS_AS(GaloisSectionAction(fx.model, 5, NFElement(fx.field, 1)), MathError);
}

TEST_CASE("sigma on the p = 5 seed") {
  const auto& fx = p5();
  const auto act = fx.action();
  const FFPoint& q1 = fx.family.seed;
  // (-r^2 z^2 t, t - r z t^2) built independently from the weight (1, 4) action.
  FFPoint expect = FFPoint::affine(rf("-r^2 z^2 t", fx.field), rf("t - r z t^2", fx.field));
  CHECK(apply_sigma(act, q1) == expect);
  CHECK(on_curve(fx.model, expect));
  CHECK(act.apply(q1, 5) == q1);
  FFPoint s = q1;
  for (int i = 0; i < 5; ++i) s = apply_sigma(act, s);
  CHECK(s == q1);
  CHECK(apply_sigma(act, FFPoint::zero(fx.field)).is_zero());
}

TEST_CASE("trace of Q1 for p = 5") {
  const auto& fx = p5();
  const auto act = fx.action();
  FFPoint tr = trace(fx.model, act, fx.family.seed);
  CHECK(tr == FFPoint::affine(RatFunc(fx.field), rf("-t", fx.field)));
  CHECK(tr == *fx.expected_trace);
  for (C t : {C(0.7, 0.2), C(-1.3, 0.4), C(2.0, -0.5)}) {
    auto [x, y] = numeric_trace(t);
    CHECK(std::abs(eval(tr.x(), t) - x) < 1e-9);
    CHECK(std::abs(eval(tr.y(), t) - y) < 1e-9);
  }
  CHECK(apply_sigma(act, tr) == tr);
  CHECK(trace(fx.model, act, FFPoint::zero(fx.field)).is_zero());
  CHECK(has_no_torsion_up_to(fx.model, tr));
}

TEST_CASE("trace of Q1 for p = 7") {
  const auto& fx = p7();
  const auto act = fx.action();
  FFPoint tr = trace(fx.model, act, fx.family.seed);
  CHECK(tr == *fx.expected_trace);
  CHECK(apply_sigma(act, tr) == tr);
  // x = t^2 X, y = t^3 Y turns y^2 = x^3 - t^3 x + t into y^2 = x^3 - T x + T with T = t^7.
  RatFunc t(Poly::variable(fx.field));
  CHECK(tr.x() * t * t == RatFunc(Poly::constant(NFElement(fx.field, 1))));
  CHECK(tr.y() * t * t * t == RatFunc(Poly::constant(NFElement(fx.field, 1))));
  auto before = parse_model("y^2 = x^3 - t x + t", fx.field);
  FFPoint one_one = FFPoint::affine(RatFunc::constant(NFElement(fx.field, 1)), RatFunc::constant(NFElement(fx.field, 1)));
  CHECK(on_curve(before, one_one));
}

TEST_CASE("group axioms and sigma homomorphism on random combinations") {
  const auto& fx = p7();
  const auto& m = fx.model;
  const auto act = fx.action();
  auto pts = random_points(fx, 30, 20240611);
  for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
    const FFPoint &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    CHECK(add_points(m, a, b) == add_points(m, b, a));
    CHECK(add_points(m, add_points(m, a, b), c) == add_points(m, a, add_points(m, b, c)));
    CHECK(add_points(m, a, negate(a)).is_zero());
    CHECK(apply_sigma(act, add_points(m, a, b)) == add_points(m, apply_sigma(act, a), apply_sigma(act, b)));
    FFPoint tr = trace(m, act, a);
    CHECK(apply_sigma(act, tr) == tr);
    CHECK(trace(m, act, apply_sigma(act, a)) == tr);
  }
  const auto& f5 = p5();
  const auto act5 = f5.action();
  auto pts5 = random_points(f5, 3, 7);
  CHECK(add_points(f5.model, add_points(f5.model, pts5[0], pts5[1]), pts5[2]) ==
        add_points(f5.model, pts5[0], add_points(f5.model, pts5[1], pts5[2])));
  CHECK(apply_sigma(act5, add_points(f5.model, pts5[0], pts5[1])) ==
        add_points(f5.model, apply_sigma(act5, pts5[0]), apply_sigma(act5, pts5[1])));
}

TEST_CASE("recipes") {
  auto v = evaluate_recipes("Q1", {{"Q0", "Q1 - sigma*Q1"}, {"P0", "Tr(Q1)"}, {"Q4", "P0 - Q1"}, {"Q5", "Q0 + sigma*Q0"},
                                   {"Q8", "sigma^3*Q0 + 2*(Q1 - Q0)"}},
                            5);
  CHECK(v[0] == SigmaCombination{1, -1, 0, 0, 0});
  CHECK(v[1] == SigmaCombination{1, 1, 1, 1, 1});
  CHECK(v[2] == SigmaCombination{0, 1, 1, 1, 1});
  CHECK(v[3] == SigmaCombination{1, 0, -1, 0, 0});
  CHECK(v[4] == SigmaCombination{0, 2, 0, 1, -1});
  CHECK(evaluate_recipes("Q1", {{"A", "sigma^6*Q1"}}, 5)[0] == SigmaCombination{0, 1, 0, 0, 0});
  CHECK_THROWS_AS(evaluate_recipes("Q1", {{"A", "Q1 + Q9"}}, 5), ParseError);
  CHECK_THROWS_AS(evaluate_recipes("Q1", {{"A", "Q1 +"}}, 5), ParseError);
}

TEST_CASE("generator family, p = 5") {
  const auto& fx = p5();
  auto rep = verify_generator_family(fx.model, fx.family, fx.action());
  CHECK(rep.count == 92);
  CHECK(rep.shape_violations == 0);
  CHECK(rep.off_curve == 0);
  CHECK(rep.sigma_fixed == 2);
  CHECK(rep.ok());
  GeneratorFamily seed_only = fx.family;
  seed_only.recipes.clear();
  CHECK(verify_generator_family(fx.model, seed_only, fx.action()).count == 10);
}

TEST_CASE("generator family, p = 7") {
  const auto& fx = p7();
  auto rep = verify_generator_family(fx.model, fx.family, fx.action());
  CHECK(rep.count == 56);
  CHECK(rep.shape_violations == 0);
  CHECK(rep.off_curve == 0);
  CHECK(rep.sigma_fixed == 0);
  GeneratorFamily bad = fx.family;
  bad.seed = FFPoint::affine(rf("t", fx.field), rf("t", fx.field));
  CHECK_THROWS_AS(verify_generator_family(fx.model, bad, fx.action()), MathError);
}
