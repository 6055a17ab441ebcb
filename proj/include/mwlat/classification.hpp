#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwlat/base_change.hpp"
#include "mwlat/weierstrass.hpp"

namespace mwlat {

// Fiber types over the two branch points and elsewhere. I0 means smooth.
struct Configuration {
  KodairaType at_zero;
  KodairaType at_infinity;
  std::vector<KodairaType> remaining;  // heaviest first

  static Configuration from(const FiberConfiguration& c);
  // Heavier fiber at 0.
  Configuration canonical() const;
  long epsilon() const;        // total v(Delta) of the remaining fibers
  long total_delta() const;
  long trivial_lattice_excess() const;  // sum of (m_v - 1)
  long singular_count() const;
  long additive_count() const;
  std::string to_string() const;  // "IV* | III | I1"
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct ConfigRow {
  int number = 0;      // configuration-table row, 0 when not listed there
  bool any_p = false;  // "Any p >= 5"
  long p = 0;          // the single admissible prime otherwise
  Configuration config;
  long epsilon = 0;
  std::string realization;  // model text
  bool isotrivial = false;
  std::string p_label() const { return any_p ? "Any p >= 5" : std::to_string(p); }
};

struct Rejection {
  Configuration config;
  long p = 0;
  std::string reason;
};

struct RationalClassification {
  std::vector<ConfigRow> rows;   // configuration table, rows 1..8
  std::vector<ConfigRow> extra;  // L-stable configurations the table does not list
  std::vector<Rejection> rejected;
  long candidates = 0;
};

// Primes standing in for every residue class mod 12 that a prime >= 5 can have.
const std::vector<long>& representative_primes();

// Necessary-condition filters and the combinatorial L-stability test for one candidate and prime.
// std::nullopt when the candidate survives.
std::optional<std::string> rational_rejection_reason(const Configuration& c, long p);

// Exhaustive search over configurations of total discriminant degree 12.
RationalClassification enumerate_rational_L_stable();

// Explicit model for a configuration (up to swapping 0 and inf); throws MathError
// if the configuration has no catalog entry.
WeierstrassModel realize_configuration(const Configuration& c);

struct K3Candidate {
  KodairaType at_zero, at_infinity;
  long p = 0;
  long epsilon = 0;
  std::string reason;  // empty when accepted
};

struct K3Classification {
  long p = 0;
  KodairaType at_zero, at_infinity;
  std::vector<K3Candidate> accepted;
  std::vector<K3Candidate> rejected;
};

std::optional<std::string> k3_rejection_reason(const KodairaType& a, const KodairaType& b, long p);
K3Classification classify_k3_L_stable();

}  // namespace mwlat
