#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace primechi {

// Evaluation point s = sigma + it.
struct SeriesPoint {
  double sigma = 0.5;
  double t = 0.0;
  static SeriesPoint critical(double t) { return {0.5, t}; }
};

// One diagnostic row: a truncated sum, the value the surrounding identity
// says it should approach, and |value - target|.  Residuals are evidence,
// not errors; only specific documented cases assert them small.
struct PartialSumReport {
  std::uint64_t depth = 0;
  std::complex<double> value{0.0, 0.0};
  std::complex<double> target{0.0, 0.0};
  double residual = 0.0;
};

// CSV with header depth,value_re,value_im,target_re,target_im,residual.
void write_reports_csv(std::ostream& out, const std::vector<PartialSumReport>& rows);

// n^(-s) as n^(-sigma) * (cos(t ln n) - i sin(t ln n)).
std::complex<double> power_term(std::uint64_t n, SeriesPoint s);

// value = sum_{m<=M} inner_term(m) / sqrt(p_m); each term collapses to
// -1/(m(m+1)), so the sum telescopes to exactly -M/(M+1).  target = -1.
// The rows form returns every prefix 1..M in one pass.
PartialSumReport omega_inner_partial(std::uint64_t M);
std::vector<PartialSumReport> omega_inner_rows(std::uint64_t M);

// sum_{n<=N} chi(n) n^(-s).
std::complex<double> dirichlet_partial(SeriesPoint s, std::uint64_t N);

// Prime / composite slices of the same sum at one fixed s.  Targets are the
// claimed limits -1 and +1; both are diagnostics (the fixed-s residual is
// reported, never asserted small).  Composites start at 4; the n = 1 term
// belongs to neither slice.
PartialSumReport omega_fixed_partial(SeriesPoint s, std::uint64_t N);
PartialSumReport lambda_fixed_partial(SeriesPoint s, std::uint64_t N);

// prod_{m<=M} (1 - chi(p_m) p_m^(-s))^(-1).  M = 0 yields 1.  A factor within
// 1e-14 of zero is rejected as singular (domain error naming m): its inverse
// would amplify rounding by ~1e14.
std::complex<double> euler_product_partial(SeriesPoint s, std::uint64_t M);

// Truncation defect |(-log(1-z)) - sum_{k<=K} z^k/k| for |z| < 1, and the
// analytic tail bound |z|^(K+1) / ((K+1)(1 - |z|)).  |z| >= 1 is a domain
// error.  The bound is exact mathematics; in doubles it is only observable
// while it stays above rounding noise (~1e-16 * (1 + |log(1-z)|)).
double log_expansion_residual(std::complex<double> z, std::uint32_t K);
double log_expansion_bound(std::complex<double> z, std::uint32_t K);
PartialSumReport log_expansion_report(std::complex<double> z, std::uint32_t K);

// value = sum over primes p <= N of (chi(p) p^(-s))^mu;
// target = -(1 - dirichlet_partial(s, N))^mu.  The residual is reported,
// never asserted small: the contrast step behind it is not an identity.
// Exception: mu = 1, where the partition identity forces
// residual = |lambda_fixed_partial(s, N).value| to rounding.
PartialSumReport power_sum_residual(SeriesPoint s, std::uint32_t mu, std::uint64_t N);

// The three truncated sums at one s, from one pass over one character table
// so all slices see bit-identical terms.  Construction asserts the partition
// identity L_N = 1 + omega_N + lambda_N: the defect, measured against scale
// max(1, |L|, |omega|, |lambda|), must be <= 1e-12 or a VerificationError is
// thrown.  (The scale matters: at sigma < 0 the sums dwarf 1 and an absolute
// 1e-12 would be below one ulp.)
struct CorollaryReport {
  PartialSumReport omega;      // target -1
  PartialSumReport dirichlet;  // target 0
  PartialSumReport lambda;     // target +1
  double partition_defect = 0.0;  // relative to the scale above
};
CorollaryReport corollary_report(SeriesPoint s, std::uint64_t N);

// Control experiment with the real nonprincipal characters mod 3 and mod 4:
// series = sum_{n<=N} chi(n) n^(-s), product = prod over the first M primes
// of (1 - chi(p) p^(-s))^(-1), residual = |series - product|.  Only moduli
// 3 and 4 are accepted.
struct ReferenceCharacterResult {
  std::complex<double> series;
  std::complex<double> product;
  double residual = 0.0;
};
ReferenceCharacterResult reference_character_L(int modulus, SeriesPoint s,
                                               std::uint64_t N, std::uint64_t M);

}  // namespace primechi
