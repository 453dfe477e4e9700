#pragma once

#include <cstdint>
#include <vector>

namespace primechi {

// sum_{n<=N} 1/n^2, compensated.  The exact tail pi^2/6 - value lies strictly
// inside (1/(N+1), 1/N); the margin at N = 1e6 is only ~5e-13, which is why
// the sum cannot be accumulated naively.
double basel_partial(std::uint64_t N);

// prod_{k<=K} (1 - x^2/(k^2 pi^2)): the factored sin(x)/x, equal to 1 at
// x = 0 and exactly 0 at x = +-pi (the k=1 factor).
double sin_product_partial(double x, std::uint64_t K);

// Positive representatives of the +-a_k root pairs of an even polynomial.
struct RootSet {
  std::vector<double> roots;  // distinct, nonzero, at most 12
};

// Expand prod_k (1 - x^2/a_k^2) by brute coefficient convolution and return
// |c_1 + sum 1/a_k^2| where c_1 is the x^2 coefficient; identically 0 in
// exact arithmetic.  The size cap keeps the convolution exact in doubles.
double coefficient_identity_check(const RootSet& roots);

// sin(x)/x three ways at x in {1, pi/2, 2}: 10-term alternating power
// series, K-factor product, std::sin reference.  For K >= 1000 both paths
// are checked against the reference within 1e-3 (VerificationError if not).
struct SincSample {
  double x;
  double series;
  double product;
  double reference;
};
struct SincDemoReport {
  std::uint64_t depth;
  std::vector<SincSample> samples;
};
SincDemoReport sin_series_root_demo(std::uint64_t K);

}  // namespace primechi
