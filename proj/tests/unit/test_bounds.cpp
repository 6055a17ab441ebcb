#include "doctest.h"
#include "mwlat/base_change.hpp"
#include "mwlat/bounds.hpp"
#include "mwlat/error.hpp"

using namespace mwlat;

TEST_CASE("ramification") {
  for (long p : {2, 3, 5, 7, 11, 13}) CHECK(ramification_points_for_genus_zero(p) == 2);
  auto r = solve_ramification(7, 0, 0);
  CHECK(r.deg_R == 12);
  CHECK(r.satisfies_hurwitz());
  CHECK_THROWS_AS(solve_ramification(5, 1, 0), MathError);
  CHECK_THROWS_AS(solve_ramification(1, 0, 0), MathError);
  // Hyperelliptic-type check: genus 2 double cover of P^1 has 6 branch points.
  CHECK(solve_ramification(2, 2, 0).ram_points == 6);
  // Unramified covers of an elliptic curve.
  CHECK(solve_ramification(5, 1, 1).ram_points == 0);
  for (long p = 2; p <= 23; ++p)
    for (long gs = 0; gs <= 6; ++gs)
      for (long gt = 0; gt <= 2; ++gt) {
        const long deg_r = 2 * (gs - 1) - 2 * p * (gt - 1);
        if (deg_r >= 0 && deg_r % (p - 1) == 0)
          CHECK(solve_ramification(p, gs, gt).satisfies_hurwitz());
        else
          CHECK_THROWS_AS(solve_ramification(p, gs, gt), MathError);
      }
}

TEST_CASE("semistable rank jump bound") {
  CHECK(semistable_rank_jump_bound(4, 0, 5) == 8);
  CHECK(semistable_rank_jump_bound(2, 0, 5) == 0);
  CHECK(semistable_rank_jump_bound(10, 2, 7) == 60);
  // 12(p - 1) - (p - 1) l - (p - 1) eps subtracted from rho - 2 - rank with the
  // fiber counts of a semistable surface gives the same number.
  for (long p : {5, 7, 11})
    for (long l = 1; l <= 12; ++l)
      for (long eps = 0; eps <= 2; ++eps) {
        if (l + eps < 2) continue;
        const long b = semistable_rank_jump_bound(l, eps, p);
        CHECK((b == 0) == (l + eps == 2));
        CHECK(semistable_rank_jump_bound(l + 1, eps, p) > b);
        if (eps < 2) CHECK(semistable_rank_jump_bound(l, eps + 1, p) > b);
        CHECK(semistable_rank_jump_bound(l, eps, p + 2 + (p == 7 ? 2 : 0)) >= b);
      }
  for (long p : {5, 7, 11}) CHECK(semistable_rank_jump_bound(2, 0, p) == 0);
  CHECK_THROWS_AS(semistable_rank_jump_bound(0, 2, 5), MathError);
  CHECK_THROWS_AS(semistable_rank_jump_bound(1, 3, 5), MathError);
  CHECK_THROWS_AS(semistable_rank_jump_bound(4, 0, 6), MathError);
}

TEST_CASE("marked ramification points") {
  CHECK(epsilon_marked_points(0, 0) == 0);
  CHECK(epsilon_marked_points(3, 0) == 1);
  CHECK(epsilon_marked_points(0, 1) == 1);
  CHECK(epsilon_marked_points(2, 5) == 2);
}

TEST_CASE("stability threshold") {
  auto t = stability_threshold(68);
  CHECK(t.first_prime == 71);
  CHECK(t.text_reading == "p > 68");
  CHECK(t.strict_reading == "p - 1 > 68");
  CHECK(stability_threshold(1).first_prime == 3);
  CHECK(stability_threshold(7).first_prime == 11);
  CHECK_THROWS_AS(stability_threshold(0), MathError);
  for (long n = 1; n <= 100; ++n) {
    const long p = stability_threshold(n).first_prime;
    CHECK(is_prime(p));
    CHECK(p - 1 > n);
    // Any smaller prime leaves room for a nonzero jump of p - 1.
    for (long q = 2; q < p; ++q)
      if (is_prime(q)) CHECK(q - 1 <= n);
    // First prime under the text reading p > n agrees whenever no prime equals n + 1.
    long text = n + 1;
    while (!is_prime(text)) ++text;
    if (!is_prime(n + 1)) CHECK(text == p);
  }
}
