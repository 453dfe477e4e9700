#include "primechi/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace primechi {
namespace {

constexpr std::uint64_t kFlatSieveLimit = 100'000'000;  // plain bit sieve up to here
constexpr std::uint64_t kSegmentSpan = 1u << 23;        // integers per segment

std::uint64_t isqrt_floor(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  while (r > 0 && r * r > n) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Plain odd-only bit sieve; bit i stands for 2i+1.
std::vector<std::uint64_t> sieve_flat(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  if (limit < 3) return primes;
  const std::uint64_t n_odd = (limit - 1) / 2 + 1;
  std::vector<std::uint64_t> bits((n_odd + 63) / 64, ~0ull);
  bits[0] &= ~1ull;  // 1 is not prime
  for (std::uint64_t v = 3; v * v <= limit; v += 2) {
    if (!(bits[v / 2 / 64] >> (v / 2 % 64) & 1)) continue;
    for (std::uint64_t u = v * v; u <= limit; u += 2 * v)
      bits[u / 2 / 64] &= ~(1ull << (u / 2 % 64));
  }
  primes.reserve(static_cast<std::size_t>(
      static_cast<double>(limit) /
      std::max(1.0, std::log(static_cast<double>(limit)) - 1.2)));
  for (std::uint64_t i = 0; i < n_odd; ++i)
    if (bits[i / 64] >> (i % 64) & 1) primes.push_back(2 * i + 1);
  return primes;
}

// Odd-only segment over [lo, lo+count), lo odd.  base must hold the odd
// primes up to sqrt(lo+count).
void sieve_segment(std::uint64_t lo, std::uint64_t count,
                   const std::vector<std::uint64_t>& base,
                   std::vector<std::uint64_t>& bits) {
  const std::uint64_t n_odd = (count + 1) / 2;
  bits.assign((n_odd + 63) / 64, ~0ull);
  for (std::uint64_t p : base) {
    if (p == 2) continue;  // even numbers are not represented
    if (p * p >= lo + count) break;
    std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
    if (start % 2 == 0) start += p;
    for (std::uint64_t v = start; v < lo + count; v += 2 * p)
      bits[(v - lo) / 2 / 64] &= ~(1ull << ((v - lo) / 2 % 64));
  }
}

// Cached ascending primes covering [2, min(requested, kFlatSieveLimit)],
// grown geometrically.  Synchronized, so observationally the cache behaves
// as if each call recomputed its own sieve.
class PrimeCache {
 public:
  template <typename Fn>
  auto with_primes(std::uint64_t limit, Fn&& fn) {
    limit = std::min(limit, kFlatSieveLimit);
    std::lock_guard<std::mutex> lock(mu_);
    if (sieved_to_ < limit) {
      std::uint64_t target =
          std::min(std::max({limit, std::uint64_t{1024}, sieved_to_ * 2}),
                   kFlatSieveLimit);
      primes_ = sieve_flat(target);
      sieved_to_ = target;
    }
    return fn(static_cast<const std::vector<std::uint64_t>&>(primes_));
  }

 private:
  std::mutex mu_;
  std::uint64_t sieved_to_ = 0;
  std::vector<std::uint64_t> primes_;
};

PrimeCache& cache() {
  static PrimeCache c;
  return c;
}

// Rosser-style upper bound on p_m, valid for every m >= 1 with the floor.
std::uint64_t nth_prime_bound(std::uint64_t m) {
  if (m < 6) return 16;
  const double dm = static_cast<double>(m);
  return static_cast<std::uint64_t>(dm * (std::log(dm) + std::log(std::log(dm)))) + 2;
}

// Trial division by 6k+-1 candidates in (from, sqrt(rest)]; used where the
// flat cache ends.  Any divisor found this way is necessarily prime.
void divide_out_beyond(std::uint64_t from, std::uint64_t& rest,
                       std::vector<PrimeFactor>& out) {
  std::uint64_t d = from | 1;
  while (d % 6 != 1 && d % 6 != 5) d += 2;
  std::uint64_t step = (d % 6 == 1) ? 4 : 2;
  while (d <= rest / d) {
    if (rest % d == 0) {
      PrimeFactor pf{d, 0};
      while (rest % d == 0) {
        rest /= d;
        ++pf.exponent;
      }
      out.push_back(pf);
    }
    d += step;
    step = 6 - step;
  }
}

constexpr std::uint64_t kPrimeIndexLimit = 1'000'000'000;

}  // namespace

std::vector<std::uint64_t> sieve_up_to(std::uint64_t limit) {
  if (limit <= kFlatSieveLimit) return sieve_flat(limit);
  std::vector<std::uint64_t> primes = sieve_flat(isqrt_floor(limit) + 1);
  const std::vector<std::uint64_t> base = primes;  // covers sqrt(limit)
  std::vector<std::uint64_t> bits;
  std::uint64_t lo = base.back() + 2;
  if (lo % 2 == 0) ++lo;
  while (lo <= limit) {
    const std::uint64_t count = std::min<std::uint64_t>(kSegmentSpan, limit - lo + 1);
    sieve_segment(lo, count, base, bits);
    for (std::uint64_t i = 0; i < (count + 1) / 2; ++i)
      if (bits[i / 64] >> (i % 64) & 1) primes.push_back(lo + 2 * i);
    lo += count;
  }
  return primes;
}

PrimeEntry nth_prime(std::uint64_t m) {
  if (m == 0)
    throw std::domain_error("nth_prime: index is 1-based, m = 0 is out of domain");
  const std::uint64_t bound = nth_prime_bound(m);
  if (bound <= kFlatSieveLimit) {
    return cache().with_primes(bound, [&](const std::vector<std::uint64_t>& ps) {
      return PrimeEntry{m, ps[m - 1]};  // bound guarantees ps.size() >= m
    });
  }
  if (bound > std::uint64_t{1} << 53)
    throw std::domain_error("nth_prime: index too large for this build");
  // Walk segments above the flat cache, counting as we go.
  auto below = cache().with_primes(kFlatSieveLimit,
                                   [&](const std::vector<std::uint64_t>& ps) {
                                     return std::pair{ps.size(), ps};
                                   });
  if (below.first >= m) return {m, below.second[m - 1]};
  std::uint64_t seen = below.first;
  std::vector<std::uint64_t> bits;
  std::uint64_t lo = kFlatSieveLimit + 1;  // odd
  for (;;) {
    const std::uint64_t count = kSegmentSpan;
    sieve_segment(lo, count, below.second, bits);
    for (std::uint64_t i = 0; i < (count + 1) / 2; ++i)
      if (bits[i / 64] >> (i % 64) & 1)
        if (++seen == m) return {m, lo + 2 * i};
    lo += count;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  const std::uint64_t root = isqrt_floor(n);
  bool composite = false;
  cache().with_primes(root + 1, [&](const std::vector<std::uint64_t>& ps) {
    for (std::uint64_t p : ps) {
      if (p * p > n) return 0;
      if (n % p == 0) {
        composite = true;
        return 0;
      }
    }
    return 0;
  });
  if (composite) return false;
  if (root > kFlatSieveLimit) {
    std::uint64_t rest = n;
    std::vector<PrimeFactor> found;
    divide_out_beyond(kFlatSieveLimit, rest, found);
    return found.empty() || (found.size() == 1 && found[0].prime == n);
  }
  return true;
}

std::uint64_t prime_index(std::uint64_t p) {
  if (!is_prime(p))
    throw std::domain_error("prime_index: " + std::to_string(p) + " is not prime");
  if (p > kPrimeIndexLimit)
    throw std::domain_error("prime_index: primes beyond 1e9 are not supported");
  if (p <= kFlatSieveLimit) {
    return cache().with_primes(p, [&](const std::vector<std::uint64_t>& ps) {
      auto it = std::lower_bound(ps.begin(), ps.end(), p);
      return static_cast<std::uint64_t>(it - ps.begin()) + 1;
    });
  }
  auto below = cache().with_primes(kFlatSieveLimit,
                                   [&](const std::vector<std::uint64_t>& ps) {
                                     return std::pair{ps.size(), ps};
                                   });
  std::uint64_t count = below.first;
  std::vector<std::uint64_t> bits;
  std::uint64_t lo = kFlatSieveLimit + 1;
  while (lo <= p) {
    const std::uint64_t span = std::min<std::uint64_t>(kSegmentSpan, p - lo + 1);
    sieve_segment(lo, span, below.second, bits);
    for (std::uint64_t i = 0; i < (span + 1) / 2; ++i)
      if (bits[i / 64] >> (i % 64) & 1) ++count;
    lo += span;
  }
  return count;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: 0 is out of domain");
  Factorization f{n, {}};
  if (n == 1) return f;
  std::uint64_t rest = n;
  const std::uint64_t root = isqrt_floor(n);
  bool certified = false;  // a cached prime exceeded sqrt(rest)
  cache().with_primes(root + 1, [&](const std::vector<std::uint64_t>& ps) {
    for (std::uint64_t p : ps) {
      if (p * p > rest) {
        certified = true;
        return 0;
      }
      if (rest % p != 0) continue;
      PrimeFactor pf{p, 0};
      while (rest % p == 0) {
        rest /= p;
        ++pf.exponent;
      }
      f.factors.push_back(pf);
    }
    return 0;
  });
  if (!certified && rest > 1) divide_out_beyond(kFlatSieveLimit, rest, f.factors);
  if (rest > 1) f.factors.push_back({rest, 1});  // leftover cofactor is prime
  if (reconstruct(f) != n)
    throw std::domain_error("factorize: reconstruction mismatch");  // unreachable
  return f;
}

std::uint64_t reconstruct(const Factorization& f) {
  std::uint64_t acc = 1;
  for (const PrimeFactor& pf : f.factors)
    for (std::uint32_t e = 0; e < pf.exponent; ++e)
      if (__builtin_mul_overflow(acc, pf.prime, &acc))
        throw std::domain_error("reconstruct: product overflows 64 bits");
  return acc;
}

}  // namespace primechi
