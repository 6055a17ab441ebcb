#pragma once

#include <string>

namespace mwlat {

// Riemann-Hurwitz for a tame cyclic cover of degree p: 2(g_src - 1) = 2p(g_tgt - 1) + deg_R,
// with deg_R = (p - 1) * ram_points.
struct RamificationProfile {
  long p = 0;
  long genus_source = 0;
  long genus_target = 0;
  long ram_points = 0;
  long deg_R = 0;

  bool satisfies_hurwitz() const;
};

// Solves for ram_points. Throws MathError when there is no nonnegative integer solution.
RamificationProfile solve_ramification(long p, long genus_source, long genus_target);
long ramification_points_for_genus_zero(long p);

// Number of the two ramification points carrying singular fibers.
long epsilon_marked_points(long n0, long n_inf);

// (p - 1)(l + eps - 2). Throws MathError when l < 1, eps outside 0..2 or l + eps < 2.
long semistable_rank_jump_bound(long l, long eps, long p);

struct StabilityThreshold {
  long rank_bound = 0;
  long first_prime = 0;  // smallest prime p with p - 1 > rank_bound
  std::string text_reading;    // "p > N"
  std::string strict_reading;  // "p - 1 > N"
};

// Base change by any prime p >= first_prime is rank stable when the rank is at most rank_bound.
StabilityThreshold stability_threshold(long rank_bound);

}  // namespace mwlat
