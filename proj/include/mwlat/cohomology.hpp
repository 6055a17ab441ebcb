#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwlat/algebra/smith.hpp"
#include "mwlat/mordell_weil.hpp"

namespace mwlat {

// M = Z^rank + (+)_i Z/torsion[i], with a generator sigma of C_n acting by the
// column-convention matrix `sigma` (column j = image of generator j; the first
// `rank` generators are free, the rest are torsion).
struct GModule {
  long n = 1;
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  IntMatrix sigma;

  std::size_t generators() const { return rank + torsion.size(); }
  // Throws MathError unless sigma^n = 1 on M and sigma maps torsion to torsion.
  void validate() const;

  // Z[C_n]^copies with sigma permuting each block cyclically.
  static GModule regular(long n, std::size_t copies = 1);
  // Z[zeta_p]^copies, sigma = companion matrix of 1 + x + ... + x^(p-1).
  static GModule cyclotomic(long p, std::size_t copies = 1);
  static GModule trivial(long n, std::size_t rank);
};

struct H1Result {
  std::vector<Integer> invariant_factors;  // all > 1, each dividing the next

  Integer order() const;
  bool trivial() const { return invariant_factors.empty(); }
  // "0", "Z/5", "(Z/5)^2", "Z/2 + Z/4".
  std::string to_string() const;
};

// H^1(C_n, M) = ker N / (sigma - 1) M via Smith normal forms.
H1Result h1_cyclic(const GModule& m);

// Kernel (Z/p)^r with r = rank_after / (p - 1), for E(K) = 0 and p in {5, ..., 23}.
long wc_kernel_rank_extremal(long rank_after, long p);
H1Result wc_kernel_extremal(long rank_after, long p);

// b_0 = 0, b_{l+1} = a_l + b_l; requires sum a = 0.
std::vector<long> coboundary_solve(const std::vector<long>& a);

struct StabilityVerdict {
  long rank_before = 0;
  long rank_after = 0;
  long p = 0;
  long jump = 0;
  bool rank_stable = false;  // implies the restriction map on WC is injective
  bool consistent = true;    // (p - 1) divides the jump
  std::string to_string() const;
};

StabilityVerdict check_rank_stability(long rank_before, long rank_after, long p);

// Kernel of WC(E/K) -> WC(E/K') when E(K') is free on the sigma-orbit of `seed`.
// Each supplied combination must have zero trace; each is exhibited as
// (1 - sigma) C with C built from coboundary_solve and checked in the group law.
H1Result wc_kernel_from_points(const WeierstrassModel& m, const GaloisSectionAction& act, const FFPoint& seed,
                               const std::vector<SigmaCombination>& trace_kernel_points, long rho = 10);

}  // namespace mwlat
