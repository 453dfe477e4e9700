#include "primechi/character.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "primechi/primes.hpp"

namespace primechi {
namespace {

// x and x^2 for the m-th prime.  The square is computed from the integers
// (p / (m(m+1))^2), not by squaring the rounded root: it is better
// conditioned and exact whenever the rational is representable, which is
// what makes chi(2) land on -i exactly.
struct Ratio {
  double x;
  double x2;
};

Ratio ratio_parts(std::uint64_t m, std::uint64_t p) {
  const double denom = static_cast<double>(m) * static_cast<double>(m + 1);
  const double dp = static_cast<double>(p);
  const double x = -std::sqrt(dp) / denom;
  const double x2 = dp / (denom * denom);
  return {clamp_to_unit(x), x2};
}

std::complex<double> chi_from_ratio(const Ratio& r) {
  const double alpha = 1.0 - 2.0 * r.x2;
  const double beta = 2.0 * r.x * std::sqrt(1.0 - r.x2);
  return {alpha, beta};
}

}  // namespace

double clamp_to_unit(double x) {
  if (x >= -1.0 && x <= 1.0) return x;
  if (x < -1.0 && x >= -1.0 - 1e-15) return -1.0;
  if (x > 1.0 && x <= 1.0 + 1e-15) return 1.0;
  throw std::domain_error("clamp_to_unit: " + std::to_string(x) +
                          " is outside [-1, 1]; prime source corrupted");
}

double ratio(std::uint64_t m) {
  return ratio_parts(m, nth_prime(m).value).x;
}

double phase(std::uint64_t m) {
  const std::uint64_t p = nth_prime(m).value;
  return std::acos(ratio_parts(m, p).x) / std::log(static_cast<double>(p));
}

CharacterEntry chi_prime(std::uint64_t m) {
  const std::uint64_t p = nth_prime(m).value;
  const Ratio r = ratio_parts(m, p);
  const double lp = std::log(static_cast<double>(p));
  return {m, p, r.x, std::acos(r.x) / lp, chi_from_ratio(r)};
}

std::complex<double> chi_prime_via_arccos(std::uint64_t m) {
  const double x = ratio(m);
  // sin(arccos x - arcsin x) = 1 - 2x^2, cos of the same angle = 2x sqrt(1-x^2)
  const double angle = std::acos(x) - std::asin(x);
  return {std::sin(angle), std::cos(angle)};
}

std::complex<double> chi_prime_via_phase(std::uint64_t m) {
  const std::uint64_t p = nth_prime(m).value;
  const double x = ratio_parts(m, p).x;
  const double lp = std::log(static_cast<double>(p));
  const double t = std::acos(x) / lp;  // the round trip under test
  const double angle = t * lp - std::asin(x);
  return {std::sin(angle), std::cos(angle)};
}

double inner_term(std::uint64_t m) {
  const CharacterEntry e = chi_prime(m);
  const double theta = e.phase * std::log(static_cast<double>(e.prime));
  // The angle-difference pair sin/cos(arcsin x - theta) satisfies the
  // defining constraint sin((arcsin x - theta) + theta) = x, so combining it
  // with (cos theta, sin theta) recovers x.  The tabulated chi negates the
  // sine argument, which flips only the real part; using chi itself here
  // would evaluate to 3x - 4x^3 instead.
  const double u = std::asin(e.ratio) - theta;
  return std::sin(u) * std::cos(theta) + std::cos(u) * std::sin(theta);
}

std::complex<double> chi_of(std::uint64_t n) {
  if (n == 0) throw std::domain_error("chi_of: 0 is out of domain");
  std::complex<double> acc{1.0, 0.0};
  for (const PrimeFactor& pf : factorize(n).factors) {
    const std::complex<double> cp = chi_prime(prime_index(pf.prime)).chi;
    for (std::uint32_t e = 0; e < pf.exponent; ++e) acc *= cp;
  }
  return acc;
}

CharacterTable::CharacterTable(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw std::domain_error("CharacterTable: limit must be >= 1");
  values_.resize(limit + 1);
  prime_index_.assign(limit + 1, 0);
  values_[0] = {0.0, 0.0};
  if (limit >= 1) values_[1] = {1.0, 0.0};
  // smallest prime factor sieve; spf[n] = 0 marks n prime
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::uint32_t m = 0;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (spf[n] == 0) {
      prime_index_[n] = ++m;
      values_[n] = chi_from_ratio(ratio_parts(m, n));
      for (std::uint64_t u = n * n; u <= limit; u += n)
        if (spf[u] == 0) spf[u] = static_cast<std::uint32_t>(n);
    } else {
      values_[n] = values_[n / spf[n]] * values_[spf[n]];
    }
  }
}

std::complex<double> CharacterTable::chi(std::uint64_t n) const {
  if (n == 0 || n > limit_)
    throw std::domain_error("CharacterTable::chi: " + std::to_string(n) +
                            " outside 1.." + std::to_string(limit_));
  return values_[n];
}

bool CharacterTable::is_prime_at(std::uint64_t n) const {
  if (n > limit_)
    throw std::domain_error("CharacterTable::is_prime_at: " + std::to_string(n) +
                            " outside table");
  return n >= 2 && prime_index_[n] != 0;
}

}  // namespace primechi
