#pragma once

#include <cstdint>
#include <vector>

namespace primechi {

struct PrimeEntry {
  std::uint64_t index;  // 1-based: index 1 is the prime 2
  std::uint64_t value;
};

struct PrimeFactor {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

struct Factorization {
  std::uint64_t n;
  std::vector<PrimeFactor> factors;  // ascending primes; empty for n = 1
};

// All primes <= limit, ascending.  Plain bit sieve up to 1e8, segmented
// above that.  limit < 2 yields an empty list.
std::vector<std::uint64_t> sieve_up_to(std::uint64_t limit);

// m-th prime, 1-based (m = 1 -> 2).  m = 0 is a domain error.  The sieve
// bound grows geometrically from the Rosser-style estimate
// p_m < m(ln m + ln ln m), so callers never supply a limit.
PrimeEntry nth_prime(std::uint64_t m);

// Inverse of nth_prime: 1-based index of p in the prime sequence.
// Composite or out-of-range input is a domain error.
std::uint64_t prime_index(std::uint64_t p);

bool is_prime(std::uint64_t n);

// Trial division by sieved primes up to sqrt(n); any leftover cofactor is
// prime.  n = 0 is a domain error; n = 1 has no factors.
Factorization factorize(std::uint64_t n);

// Checked product of prime^exponent over the factorization; an overflow past
// 64 bits is a domain error, never a silent wraparound.
std::uint64_t reconstruct(const Factorization& f);

}  // namespace primechi
