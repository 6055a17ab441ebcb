#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mwlat/algebra/poly.hpp"

namespace mwlat {

// A word-size prime p over which every level of a tower splits completely,
// with all deg F ring maps F -> F_p.
struct ModularPrime {
  std::uint64_t p = 0;
  // basis[e][i]: image of flat basis monomial i under embedding e.
  std::vector<std::vector<std::uint64_t>> basis;
  // Inverse of the basis matrix: recovers flat coordinates from the images.
  std::vector<std::vector<std::uint64_t>> inverse;
};

// The index-th such prime, searching downward from 2^31. Cached per field; thread-safe.
std::shared_ptr<const ModularPrime> modular_prime(const NumberField& field, std::size_t index);

// Monic gcd by reduction at split primes, CRT and rational reconstruction,
// certified by exact division. nullopt when no certificate was found.
std::optional<Poly> modular_gcd(const Poly& a, const Poly& b);

}  // namespace mwlat
