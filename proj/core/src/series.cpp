#include "primechi/series.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "primechi/accum.hpp"
#include "primechi/character.hpp"
#include "primechi/errors.hpp"
#include "primechi/format.hpp"
#include "primechi/primes.hpp"

namespace primechi {
namespace {

constexpr double kSingularFactor = 1e-14;

std::complex<double> ipow(std::complex<double> b, std::uint32_t e) {
  std::complex<double> acc{1.0, 0.0};
  for (std::uint32_t i = 0; i < e; ++i) acc *= b;
  return acc;
}

struct PartitionSums {
  std::complex<double> L;       // all n
  std::complex<double> omega;   // primes
  std::complex<double> lambda;  // composites >= 4
};

// One ascending pass over one character table, so the three slices are built
// from bit-identical terms and the partition L = 1 + omega + lambda can only
// be violated by accumulator rounding.
PartitionSums partition_sums(SeriesPoint s, std::uint64_t N) {
  if (N == 0) throw std::domain_error("series: N must be >= 1");
  CharacterTable table(N);
  ComplexSum L, omega, lambda;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const std::complex<double> term = table.chi(n) * power_term(n, s);
    L.add(term);
    if (table.is_prime_at(n))
      omega.add(term);
    else if (n >= 4)
      lambda.add(term);
  }
  return {L.value(), omega.value(), lambda.value()};
}

double partition_scale(const PartitionSums& p) {
  return std::max({1.0, std::abs(p.L), std::abs(p.omega), std::abs(p.lambda)});
}

}  // namespace

std::complex<double> power_term(std::uint64_t n, SeriesPoint s) {
  const double dn = static_cast<double>(n);
  const double r = std::pow(dn, -s.sigma);
  const double ang = s.t * std::log(dn);
  return {r * std::cos(ang), -r * std::sin(ang)};
}

void write_reports_csv(std::ostream& out, const std::vector<PartialSumReport>& rows) {
  out << "depth,value_re,value_im,target_re,target_im,residual\n";
  for (const PartialSumReport& r : rows) {
    out << r.depth << ',' << format_fixed10(r.value.real()) << ','
        << format_fixed10(r.value.imag()) << ',' << format_fixed10(r.target.real())
        << ',' << format_fixed10(r.target.imag()) << ',' << format_fixed10(r.residual)
        << '\n';
  }
}

std::vector<PartialSumReport> omega_inner_rows(std::uint64_t M) {
  if (M == 0) throw std::domain_error("omega_inner_partial: M must be >= 1");
  std::vector<PartialSumReport> rows;
  rows.reserve(M);
  CompensatedSum sum;
  for (std::uint64_t m = 1; m <= M; ++m) {
    const double p = static_cast<double>(nth_prime(m).value);
    sum.add(inner_term(m) / std::sqrt(p));
    PartialSumReport r;
    r.depth = m;
    r.value = {sum.value(), 0.0};
    r.target = {-1.0, 0.0};
    r.residual = std::abs(r.value - r.target);
    rows.push_back(r);
  }
  return rows;
}

PartialSumReport omega_inner_partial(std::uint64_t M) {
  return omega_inner_rows(M).back();
}

std::complex<double> dirichlet_partial(SeriesPoint s, std::uint64_t N) {
  return partition_sums(s, N).L;
}

PartialSumReport omega_fixed_partial(SeriesPoint s, std::uint64_t N) {
  PartialSumReport r;
  r.depth = N;
  r.value = partition_sums(s, N).omega;
  r.target = {-1.0, 0.0};
  r.residual = std::abs(r.value - r.target);
  return r;
}

PartialSumReport lambda_fixed_partial(SeriesPoint s, std::uint64_t N) {
  PartialSumReport r;
  r.depth = N;
  r.value = partition_sums(s, N).lambda;
  r.target = {1.0, 0.0};
  r.residual = std::abs(r.value - r.target);
  return r;
}

std::complex<double> euler_product_partial(SeriesPoint s, std::uint64_t M) {
  std::complex<double> prod{1.0, 0.0};
  for (std::uint64_t m = 1; m <= M; ++m) {
    const CharacterEntry e = chi_prime(m);
    const std::complex<double> factor =
        std::complex<double>{1.0, 0.0} - e.chi * power_term(e.prime, s);
    if (std::abs(factor) <= kSingularFactor)
      throw std::domain_error("euler_product_partial: Euler factor singular at m=" +
                              std::to_string(m));
    prod /= factor;
  }
  return prod;
}

double log_expansion_bound(std::complex<double> z, std::uint32_t K) {
  const double az = std::abs(z);
  if (az >= 1.0)
    throw std::domain_error("log_expansion: |z| must be < 1, got |z|=" +
                            std::to_string(az));
  return std::pow(az, static_cast<double>(K) + 1.0) /
         ((static_cast<double>(K) + 1.0) * (1.0 - az));
}

PartialSumReport log_expansion_report(std::complex<double> z, std::uint32_t K) {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("log_expansion: |z| must be < 1");
  if (K == 0) throw std::domain_error("log_expansion: K must be >= 1");
  ComplexSum sum;
  std::complex<double> zp{1.0, 0.0};
  for (std::uint32_t k = 1; k <= K; ++k) {
    zp *= z;
    sum.add(zp / static_cast<double>(k));
  }
  PartialSumReport r;
  r.depth = K;
  r.value = sum.value();
  r.target = -std::log(std::complex<double>{1.0, 0.0} - z);
  r.residual = std::abs(r.value - r.target);
  return r;
}

double log_expansion_residual(std::complex<double> z, std::uint32_t K) {
  return log_expansion_report(z, K).residual;
}

PartialSumReport power_sum_residual(SeriesPoint s, std::uint32_t mu, std::uint64_t N) {
  if (mu == 0) throw std::domain_error("power_sum_residual: mu must be >= 1");
  if (N == 0) throw std::domain_error("power_sum_residual: N must be >= 1");
  CharacterTable table(N);
  ComplexSum L, powers;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const std::complex<double> term = table.chi(n) * power_term(n, s);
    L.add(term);
    if (table.is_prime_at(n)) powers.add(ipow(term, mu));
  }
  PartialSumReport r;
  r.depth = N;
  r.value = powers.value();
  r.target = -ipow(std::complex<double>{1.0, 0.0} - L.value(), mu);
  r.residual = std::abs(r.value - r.target);
  return r;
}

CorollaryReport corollary_report(SeriesPoint s, std::uint64_t N) {
  const PartitionSums sums = partition_sums(s, N);
  CorollaryReport rep;
  rep.omega = {N, sums.omega, {-1.0, 0.0}, std::abs(sums.omega + 1.0)};
  rep.dirichlet = {N, sums.L, {0.0, 0.0}, std::abs(sums.L)};
  rep.lambda = {N, sums.lambda, {1.0, 0.0}, std::abs(sums.lambda - 1.0)};
  const std::complex<double> defect = sums.L - (1.0 + sums.omega + sums.lambda);
  rep.partition_defect = std::abs(defect) / partition_scale(sums);
  if (!(rep.partition_defect <= 1e-12))
    throw VerificationError(
        "corollary_report: partition identity violated, scaled defect " +
        format_exact(rep.partition_defect));
  return rep;
}

ReferenceCharacterResult reference_character_L(int modulus, SeriesPoint s,
                                               std::uint64_t N, std::uint64_t M) {
  if (modulus != 3 && modulus != 4)
    throw std::domain_error("reference_character_L: modulus must be 3 or 4");
  if (N == 0 || M == 0)
    throw std::domain_error("reference_character_L: N and M must be >= 1");
  const auto chi = [modulus](std::uint64_t n) -> int {
    const std::uint64_t r = n % static_cast<std::uint64_t>(modulus);
    if (modulus == 4) return n % 2 == 0 ? 0 : (r == 1 ? 1 : -1);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
  };
  ComplexSum series;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const int c = chi(n);
    if (c == 0) continue;
    series.add(static_cast<double>(c) * power_term(n, s));
  }
  std::complex<double> product{1.0, 0.0};
  for (std::uint64_t m = 1; m <= M; ++m) {
    const std::uint64_t p = nth_prime(m).value;
    const int c = chi(p);
    if (c == 0) continue;
    const std::complex<double> factor =
        std::complex<double>{1.0, 0.0} - static_cast<double>(c) * power_term(p, s);
    if (std::abs(factor) <= kSingularFactor)
      throw std::domain_error("reference_character_L: Euler factor singular at m=" +
                              std::to_string(m));
    product /= factor;
  }
  ReferenceCharacterResult res;
  res.series = series.value();
  res.product = product;
  res.residual = std::abs(res.series - res.product);
  return res;
}

}  // namespace primechi
