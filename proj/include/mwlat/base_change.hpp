#pragma once

#include <vector>

#include "mwlat/weierstrass.hpp"

namespace mwlat {

bool is_prime(long n);

// 12d - v_0(Delta) - v_inf(Delta) for a globally minimal model: the discriminant
// degree away from the two branch points.
long epsilon_degree(const WeierstrassModel& m);

// t0 -> t0^p, t1 -> t1^p. Degrees multiply by p; usually not minimal at 0 and inf.
WeierstrassModel pull_back(const WeierstrassModel& m, long p);

struct FiberTransition {
  FiberData before;
  KodairaType after;
  long copies = 1;  // geometric fibers above each geometric fiber below
};

struct BaseChangeReport {
  long p = 0;
  WeierstrassModel before;
  WeierstrassModel pulled_back;
  WeierstrassModel after;
  FiberConfiguration config_before;
  FiberConfiguration config_after;
  long epsilon = 0;
  long steps_zero = 0;      // minimization steps at 0 after pulling back
  long steps_infinity = 0;  // and at infinity
  long degree_before = 0;   // deg L
  long degree_after = 0;
  bool l_stable = false;
  std::vector<FiberTransition> transitions;
};

// Pull back, minimize, type both sides and check 12 deg L' = v0'(D) + v_inf'(D) + p eps.
// p must be a prime >= 5 unless allow_small_p.
BaseChangeReport analyze_base_change(const WeierstrassModel& m, long p, bool allow_small_p = false);

struct TransitionResult {
  KodairaType type;
  long copies = 1;
  friend bool operator==(const TransitionResult&, const TransitionResult&) = default;
};

// Closed form: multiply (v(f), v(g), v(Delta)) by p and strip (4, 6, 12) steps.
TransitionResult transition_type(const KodairaType& t, long p, bool ramified);

// Same answer from the pipeline: realize t at a point, pull back, minimize, re-type.
TransitionResult transition_type_pipeline(const KodairaType& t, long p, bool ramified);

// A model whose fiber at t = 0 has type t (and that is minimal everywhere).
WeierstrassModel local_realization(const KodairaType& t);

}  // namespace mwlat
