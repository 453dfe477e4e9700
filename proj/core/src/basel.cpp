#include "primechi/basel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primechi/accum.hpp"
#include "primechi/errors.hpp"
#include "primechi/format.hpp"

namespace primechi {
namespace {

// 10-term truncation of 1 - x^2/3! + x^4/5! - ...; the 11th term is below
// 1e-13 for |x| <= 2, so this is effectively sin(x)/x at the demo points.
double sinc_series10(double x) {
  CompensatedSum sum;
  double term = 1.0;
  const double x2 = x * x;
  for (int j = 0; j < 10; ++j) {
    sum.add(term);
    term *= -x2 / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
  }
  return sum.value();
}

}  // namespace

double basel_partial(std::uint64_t N) {
  if (N == 0) throw std::domain_error("basel_partial: N must be >= 1");
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double dn = static_cast<double>(n);
    sum.add(1.0 / (dn * dn));
  }
  return sum.value();
}

double sin_product_partial(double x, std::uint64_t K) {
  if (K == 0) throw std::domain_error("sin_product_partial: K must be >= 1");
  if (!std::isfinite(x)) throw std::domain_error("sin_product_partial: x must be finite");
  double prod = 1.0;
  const double x2 = x * x;
  for (std::uint64_t k = 1; k <= K; ++k) {
    const double kpi = static_cast<double>(k) * std::numbers::pi;
    prod *= 1.0 - x2 / (kpi * kpi);
  }
  return prod;
}

double coefficient_identity_check(const RootSet& set) {
  const std::size_t n = set.roots.size();
  if (n == 0) throw std::domain_error("coefficient_identity_check: empty root set");
  if (n > 12)
    throw std::domain_error("coefficient_identity_check: at most 12 roots (got " +
                            std::to_string(n) + ")");
  for (std::size_t i = 0; i < n; ++i) {
    if (set.roots[i] == 0.0)
      throw std::domain_error("coefficient_identity_check: zero root rejected");
    if (!std::isfinite(set.roots[i]))
      throw std::domain_error("coefficient_identity_check: roots must be finite");
    for (std::size_t j = i + 1; j < n; ++j)
      if (set.roots[i] == set.roots[j])
        throw std::domain_error("coefficient_identity_check: roots must be distinct");
  }
  // coefficients over the x^2 grading: poly[j] is the coefficient of x^(2j)
  std::vector<double> poly{1.0};
  for (double a : set.roots) {
    const double inv = 1.0 / (a * a);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] -= poly[j] * inv;
    }
    poly = std::move(next);
  }
  CompensatedSum inv_sum;
  for (double a : set.roots) inv_sum.add(1.0 / (a * a));
  return std::abs(poly[1] + inv_sum.value());
}

SincDemoReport sin_series_root_demo(std::uint64_t K) {
  if (K < 2) throw std::domain_error("sin_series_root_demo: K must be >= 2");
  SincDemoReport report;
  report.depth = K;
  const double points[3] = {1.0, std::numbers::pi / 2.0, 2.0};
  for (double x : points) {
    SincSample s;
    s.x = x;
    s.series = sinc_series10(x);
    s.product = sin_product_partial(x, K);
    s.reference = std::sin(x) / x;
    report.samples.push_back(s);
    if (K >= 1000) {
      if (!(std::abs(s.series - s.reference) <= 1e-3 &&
            std::abs(s.product - s.reference) <= 1e-3))
        throw VerificationError("sin_series_root_demo: agreement beyond 1e-3 at x=" +
                                format_fixed10(x));
    }
  }
  return report;
}

}  // namespace primechi
