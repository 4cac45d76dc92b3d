#include "orbitmat/primes.hpp"

#include <limits>

#include "orbitmat/errors.hpp"

namespace orbitmat {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Witness set covering all n < 3.3e24 (far beyond 64 bits).
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  const std::uint64_t n = static_cast<std::uint64_t>(x);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t v = powmod(a, d, n);
    if (v == 1 || v == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      v = mulmod(v, v, n);
      if (v == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t next_prime_after(std::int64_t x) {
  // Largest gap below 2^64 is well under 2000; refuse to search past the edge.
  if (x > std::numeric_limits<std::int64_t>::max() - 2000) {
    throw Error(ErrorCode::Overflow, "next prime search would exceed the 64-bit range");
  }
  if (x < 2) return 2;
  std::int64_t candidate = x + 1 + (x % 2);  // first odd > x; even candidates > 2 are composite
  while (!is_prime(candidate)) candidate += 2;
  return candidate;
}

std::vector<index_t> primes_up_to(index_t n) {
  std::vector<index_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (index_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= n; q += p) {
      composite[static_cast<std::size_t>(q)] = true;
    }
  }
  return primes;
}

std::int64_t prime_count(index_t n) {
  return static_cast<std::int64_t>(primes_up_to(n).size());
}

}  // namespace orbitmat
