#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace primechi {

// Per-prime unit value attached to the m-th prime p:
//   ratio  x = -sqrt(p) / (m(m+1))          (always in (-1, 0))
//   phase  t = arccos(x) / ln p
//   chi    = (1 - 2x^2) + 2x sqrt(1 - x^2) i
// chi has unit modulus by construction; its imaginary part is negative for
// every m.  Extended to all n >= 1 by complete multiplicativity.
struct CharacterEntry {
  std::uint64_t index;  // m
  std::uint64_t prime;  // p
  double ratio;
  double phase;
  std::complex<double> chi;
};

double ratio(std::uint64_t m);
double phase(std::uint64_t m);
CharacterEntry chi_prime(std::uint64_t m);

// Two slower trigonometric routes to the same value, kept as cross-checks on
// the closed form: one evaluates the angle arccos(x) - arcsin(x) directly,
// the other reconstitutes the angle from the phase (t * ln p - arcsin(x)).
std::complex<double> chi_prime_via_arccos(std::uint64_t m);
std::complex<double> chi_prime_via_phase(std::uint64_t m);

// The building block of the telescoping prime sum: alpha cos(t ln p) +
// beta sin(t ln p), evaluated with the sign branch that satisfies the
// defining constraint sin(arcsin x) = x.  Equals ratio(m) to rounding.
double inner_term(std::uint64_t m);

// chi(n) for arbitrary n via factorization.  chi(1) = 1.
std::complex<double> chi_of(std::uint64_t n);

// Memoized chi over 1..limit, built from one smallest-prime-factor sieve so
// that chi(ab) is literally the product of previously computed values.  All
// series over a common range must read from one shared table: it guarantees
// the prime and composite partial sums see bit-identical terms.
class CharacterTable {
 public:
  explicit CharacterTable(std::uint64_t limit);  // limit >= 1

  std::uint64_t limit() const { return limit_; }
  std::complex<double> chi(std::uint64_t n) const;  // 1 <= n <= limit
  bool is_prime_at(std::uint64_t n) const;          // n <= limit

 private:
  std::uint64_t limit_;
  std::vector<std::complex<double>> values_;  // [0] unused
  std::vector<std::uint32_t> prime_index_;    // m for primes, 0 otherwise
};

// Guard for the arccos/arcsin domain: values within 1e-15 of [-1, 1] are
// clamped onto the boundary, anything farther out means the prime source is
// corrupted and raises a domain error.
double clamp_to_unit(double x);

}  // namespace primechi
