#include "mwlat/bounds.hpp"

#include "mwlat/base_change.hpp"
#include "mwlat/error.hpp"

namespace mwlat {

bool RamificationProfile::satisfies_hurwitz() const {
  return deg_R == (p - 1) * ram_points && 2 * (genus_source - 1) == 2 * p * (genus_target - 1) + deg_R;
}

RamificationProfile solve_ramification(long p, long genus_source, long genus_target) {
  if (p < 2) throw MathError("cover degree must be at least 2");
  if (genus_source < 0 || genus_target < 0) throw MathError("genera must be nonnegative");
  const long deg_r = 2 * (genus_source - 1) - 2 * p * (genus_target - 1);
  if (deg_r < 0 || deg_r % (p - 1) != 0)
    throw MathError("no cyclic degree-" + std::to_string(p) + " cover of genus " + std::to_string(genus_target) +
                    " by genus " + std::to_string(genus_source) + ": deg R = " + std::to_string(deg_r) +
                    " is not a nonnegative multiple of " + std::to_string(p - 1));
  return {p, genus_source, genus_target, deg_r / (p - 1), deg_r};
}

long ramification_points_for_genus_zero(long p) { return solve_ramification(p, 0, 0).ram_points; }

long epsilon_marked_points(long n0, long n_inf) {
  if (n0 < 0 || n_inf < 0) throw MathError("fiber counts must be nonnegative");
  return (n0 > 0) + (n_inf > 0);
}

long semistable_rank_jump_bound(long l, long eps, long p) {
  if (l < 1) throw MathError("l must be positive");
  if (eps < 0 || eps > 2) throw MathError("eps must be 0, 1 or 2");
  if (l + eps < 2) throw MathError("l + eps must be at least 2");
  if (!is_prime(p)) throw MathError("p must be prime");
  return (p - 1) * (l + eps - 2);
}

StabilityThreshold stability_threshold(long rank_bound) {
  if (rank_bound < 1) throw MathError("rank bound must be positive");
  long p = rank_bound + 2;
  while (!is_prime(p)) ++p;
  const std::string n = std::to_string(rank_bound);
  return {rank_bound, p, "p > " + n, "p - 1 > " + n};
}

}  // namespace mwlat
