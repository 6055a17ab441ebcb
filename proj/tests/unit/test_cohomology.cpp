#include "doctest.h"
#include "mwlat/cohomology.hpp"
#include "mwlat/error.hpp"
#include "mwlat/io/fixture.hpp"
#include "support/h1_oracle.hpp"

using namespace mwlat;
using namespace mwlat::testing;

TEST_CASE("h1 examples") {
  CHECK(h1_cyclic(GModule::regular(5)).trivial());
  auto z5 = h1_cyclic(GModule::cyclotomic(5));
  CHECK(z5.invariant_factors == std::vector<Integer>{5});
  CHECK(z5.to_string() == "Z/5");
  CHECK(h1_cyclic(GModule::trivial(5, 1)).trivial());
  // Z with sigma = -1 for n = 2: ker N = Z, image 2Z.
  CHECK(h1_cyclic(GModule{2, 1, {}, IntMatrix{{-1}}}).invariant_factors == std::vector<Integer>{2});
  // Z/2 with trivial action: ker N = Z/2, image 0.
  CHECK(h1_cyclic(GModule{2, 0, {2}, IntMatrix{{1}}}).invariant_factors == std::vector<Integer>{2});
}

TEST_CASE("free modules are acyclic and O^r gives (Z/p)^r") {
  for (long n : {2, 3, 5, 7})
    for (std::size_t k = 1; k <= 3; ++k) CHECK(h1_cyclic(GModule::regular(n, k)).trivial());
  for (long p : {5, 7})
    for (std::size_t r = 1; r <= 3; ++r) {
      auto h = h1_cyclic(GModule::cyclotomic(p, r));
      CHECK(h.invariant_factors == std::vector<Integer>(r, Integer(p)));
    }
  CHECK(h1_cyclic(GModule::cyclotomic(5, 2)).to_string() == "(Z/5)^2");
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(h1_cyclic(GModule{5, 1, {}, IntMatrix{{-1}}}), MathError);
  CHECK_THROWS_AS(h1_cyclic(GModule{2, 1, {}, IntMatrix{{1, 0}}}), MathError);
  // Torsion generator mapped to a free one.
  CHECK_THROWS_AS(GModule({2, 1, {2}, IntMatrix{{1, 1}, {0, 1}}}).validate(), MathError);
  // Multiplier 2 on Z/3 has order 2, not 3.
  CHECK_THROWS_AS(GModule({3, 0, {3}, IntMatrix{{2}}}).validate(), MathError);
}

TEST_CASE("h1 matches brute-force coset enumeration on a random corpus") {
  const auto corpus = h1_corpus();
  REQUIRE(corpus.size() == 200);
  int torsion_cases = 0, nontrivial = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const GModule& m = corpus[i];
    CAPTURE(i);
    CAPTURE(m.sigma.to_string());
    CHECK(m.generators() <= 4);
    const H1Result h = h1_cyclic(m);
    CHECK(h.order() == oracle_h1_order(m));
    for (const auto& d : h.invariant_factors) CHECK(Integer(m.n) % d == 0);
    torsion_cases += !m.torsion.empty();
    nontrivial += !h.trivial();
  }
  CHECK(torsion_cases > 30);
  CHECK(nontrivial > 30);
}

TEST_CASE("extremal kernel ranks") {
  CHECK(wc_kernel_rank_extremal(8, 5) == 2);
  CHECK(wc_kernel_rank_extremal(4, 5) == 1);
  CHECK(wc_kernel_rank_extremal(0, 5) == 0);
  CHECK(wc_kernel_extremal(8, 5).to_string() == "(Z/5)^2");
  CHECK(wc_kernel_extremal(4, 5).to_string() == "Z/5");
  CHECK(wc_kernel_extremal(0, 5).to_string() == "0");
  CHECK_THROWS_AS(wc_kernel_rank_extremal(6, 5), MathError);
  CHECK_THROWS_AS(wc_kernel_rank_extremal(8, 29), MathError);
  // Agrees with H^1 of O^r.
  CHECK(wc_kernel_extremal(12, 7).invariant_factors == h1_cyclic(GModule::cyclotomic(7, 2)).invariant_factors);
}

TEST_CASE("coboundary solver") {
  CHECK(coboundary_solve({1, -1, 0, 0, 0}) == std::vector<long>{0, 1, 0, 0, 0});
  CHECK(coboundary_solve({0, 0, 0, 0, 0}) == std::vector<long>(5, 0));
  CHECK_THROWS_AS(coboundary_solve({1, 0, 0, 0, 0}), MathError);
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<long> a(7);
    long sum = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) sum += a[i] = d(rng);
    a.back() = -sum;
    auto b = coboundary_solve(a);
    CHECK(b[0] == 0);
    for (std::size_t l = 0; l < a.size(); ++l) CHECK(b[(l + 1) % a.size()] - b[l] == a[l]);
  }
}

TEST_CASE("rank stability verdicts") {
  auto v = check_rank_stability(1, 5, 5);
  CHECK(!v.rank_stable);
  CHECK(v.jump == 4);
  CHECK(v.consistent);
  CHECK(check_rank_stability(0, 0, 5).rank_stable);
  auto w = check_rank_stability(1, 7, 7);
  CHECK(w.jump == 6);
  CHECK(w.consistent);
  CHECK(!check_rank_stability(0, 3, 5).consistent);
  CHECK_THROWS_AS(check_rank_stability(2, 1, 5), MathError);
}

TEST_CASE("kernel from explicit points") {
  const auto p5 = load_named_fixture("ell34_p5");
  const auto a5 = p5.action();
  auto h = wc_kernel_from_points(p5.model, a5, p5.family.seed, {{1, -1, 0, 0, 0}, {1, 0, -1, 0, 0}, {0, 2, -1, 0, -1}});
  CHECK(h.trivial());
  CHECK_THROWS_AS(wc_kernel_from_points(p5.model, a5, p5.family.seed, {{1, 0, 0, 0, 0}}), MathError);

  const auto p7 = load_named_fixture("ell7_p7");
  auto h7 = wc_kernel_from_points(p7.model, p7.action(), p7.family.seed, {{1, -1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, -1, 0, 0}});
  CHECK(h7.trivial());
  CHECK(h1_cyclic(GModule::regular(7)).trivial());
}
