#pragma once

#include <cstdint>
#include <vector>

#include "orbitmat/types.hpp"

namespace orbitmat {

// Deterministic Miller-Rabin, exact for the full unsigned 64-bit range.
bool is_prime(std::int64_t x);

// Smallest prime strictly greater than x. Throws Overflow near the top of
// the 64-bit range instead of wrapping.
std::int64_t next_prime_after(std::int64_t x);

// Eratosthenes sieve; ascending primes <= n.
std::vector<index_t> primes_up_to(index_t n);

// Prime-counting function via the sieve.
std::int64_t prime_count(index_t n);

}  // namespace orbitmat
