#pragma once

#include <cstdint>
#include <vector>

namespace picenum::numtheory {

// All arguments must be >= 1; throws std::invalid_argument otherwise.

// Mobius function, in {-1, 0, 1}.
int mobius(std::int64_t n);

// Euler totient.
std::int64_t totient(std::int64_t n);

// All positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

// gcd of a nonempty list.
std::int64_t gcd_all(const std::vector<std::int64_t>& v);

// (prime, exponent) pairs, primes increasing.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

}  // namespace picenum::numtheory
