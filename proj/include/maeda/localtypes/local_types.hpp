#pragma once

#include <cstdint>
#include <vector>

namespace maeda {

/// Count of (inertial-type orbit, compatible Atkin-Lehner sign) pairs at one
/// prime power, as given by the closed case tables.
/// Throws std::invalid_argument if p is not prime or n < 0.
std::int64_t lo_prime_power(std::int64_t p, int n);

struct LocalFactor {
  std::int64_t prime;
  int exponent;
  std::int64_t value;
};

/// LO(N) together with its prime-power breakdown; value is the product of the
/// breakdown values (empty breakdown and value 1 for N = 1).
struct LocalOrbitCount {
  std::int64_t level;
  std::int64_t value;
  std::vector<LocalFactor> breakdown;
};

/// Throws std::invalid_argument for N < 1.
LocalOrbitCount lo(std::int64_t level);

/// Orbits of Z/m under multiplication by (Z/m)^*, counted by explicit
/// enumeration. Equals the number of Galois orbits of characters of a cyclic
/// group of order m. Throws for m < 1.
std::int64_t character_orbit_count(std::int64_t m);

}  // namespace maeda
