#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "primechi/character.hpp"
#include "primechi/primes.hpp"

using namespace primechi;
using std::abs;

namespace {
// 40-digit reference values, rounded to double
constexpr double kRatio1 = -0.7071067811865475244;    // -sqrt(2)/2
constexpr double kRatio2 = -0.28867513459481288225;   // -sqrt(3)/6
constexpr double kRatio3 = -0.1863389981249824747;    // -sqrt(5)/12
constexpr double kRatio45 = -0.0067805163515063766331;
constexpr double kPhase1 = 3.3992701063703953572;
constexpr double kPhase2 = 1.6963574117515416614;
constexpr double kBeta2 = -0.55277079839256664152;

const std::complex<double> kChi9{0.38888888888888888889, -0.9212846639876110692};
const std::complex<double> kChi45{0.99990804919601390931, -0.013560720962464631904};
const std::complex<double> kChi134{0.99999537354074783016, -0.003041857508203574909};
const std::complex<double> kChi180{0.99999798578632151071, -0.0020070932464441802536};
const std::complex<double> kChi121{0.90341728395061728395, -0.4287624179651124022};
}  // namespace

TEST_CASE("ratio at reference indexes") {
  CHECK(ratio(1) == doctest::Approx(kRatio1).epsilon(1e-16));
  CHECK(ratio(2) == doctest::Approx(kRatio2).epsilon(1e-16));
  CHECK(ratio(3) == doctest::Approx(kRatio3).epsilon(1e-16));
  CHECK(ratio(45) == doctest::Approx(kRatio45).epsilon(1e-15));
  CHECK_THROWS_AS(ratio(0), std::domain_error);
}

TEST_CASE("ratio stays strictly inside (-1, 0) far out") {
  double prev_abs = 1.0;
  for (std::uint64_t m = 1; m <= 1000000; m = m < 100 ? m + 1 : m * 21 / 16) {
    double x = ratio(m);
    CHECK(x > -1.0);
    CHECK(x < 0.0);
    CHECK(abs(x) < prev_abs);  // magnitude shrinks along this increasing walk
    prev_abs = abs(x);
  }
}

TEST_CASE("phase at reference indexes") {
  CHECK(phase(1) == doctest::Approx(kPhase1).epsilon(1e-15));
  CHECK(phase(2) == doctest::Approx(kPhase2).epsilon(1e-15));
  for (std::uint64_t m = 1; m <= 2000; ++m) {
    double t = phase(m);
    double x = ratio(m);
    // definition unwound: cos(t ln p) == x
    double lp = std::log(static_cast<double>(nth_prime(m).value));
    CHECK(std::cos(t * lp) == doctest::Approx(x).epsilon(1e-12));
    CHECK(t > 0.0);
  }
}

TEST_CASE("chi at the first prime is exactly -i") {
  auto e = chi_prime(1);
  CHECK(e.index == 1);
  CHECK(e.prime == 2);
  CHECK(e.chi.real() == 0.0);  // 1 - 2*(2/4) with the square formed exactly
  CHECK(std::abs(e.chi.imag() - -1.0) <= 5e-16);
}

TEST_CASE("chi at reference primes") {
  auto e2 = chi_prime(2);
  CHECK(e2.prime == 3);
  CHECK(e2.chi.real() == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(e2.chi.imag() == doctest::Approx(kBeta2).epsilon(1e-15));

  CHECK(abs(chi_prime(45).chi - kChi45) < 1e-14);
  CHECK(abs(chi_prime(134).chi - kChi134) < 1e-14);
  CHECK(chi_prime(134).chi.real() > 0.0);  // the sign the formula produces
  CHECK(abs(chi_prime(180).chi - kChi180) < 1e-14);
  CHECK(chi_prime(180).prime == 1069);
  CHECK(chi_prime(64).chi.imag() ==
        doctest::Approx(-0.0084783815510945347143).epsilon(1e-14));
  CHECK(chi_prime(87).chi.imag() ==
        doctest::Approx(-0.005535407246983399584).epsilon(1e-14));
}

TEST_CASE("unit modulus and negative imaginary part across 1e4 primes") {
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    auto e = chi_prime(m);
    CHECK(abs(abs(e.chi) - 1.0) <= 2e-15);
    CHECK(e.chi.imag() < 0.0);
  }
}

TEST_CASE("three trigonometric routes agree") {
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    auto closed = chi_prime(m).chi;
    CHECK(abs(chi_prime_via_arccos(m) - closed) <= 1e-12);
    CHECK(abs(chi_prime_via_phase(m) - closed) <= 1e-12);
  }
}

TEST_CASE("inner term telescopes back to the ratio") {
  CHECK(inner_term(1) == doctest::Approx(kRatio1).epsilon(1e-15));
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    CHECK(abs(inner_term(m) - ratio(m)) <= 1e-12);
  }
}

TEST_CASE("chi_of handles 1, primes, and prime powers") {
  CHECK(chi_of(1) == std::complex<double>{1.0, 0.0});
  CHECK(abs(chi_of(2) - std::complex<double>{0.0, -1.0}) < 1e-15);
  CHECK(abs(chi_of(4) - std::complex<double>{-1.0, 0.0}) < 1e-15);
  CHECK(abs(chi_of(9) - kChi9) < 1e-14);
  CHECK(abs(chi_of(121) - kChi121) < 1e-14);
  CHECK(abs(chi_of(6) -
            std::complex<double>{-0.5527707983925666, -0.8333333333333333}) <
        1e-14);
  CHECK_THROWS_AS(chi_of(0), std::domain_error);
}

TEST_CASE("chi_of is completely multiplicative") {
  std::mt19937_64 rng(0xc4a7);
  std::uniform_int_distribution<std::uint64_t> dist(1, 3000);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t a = dist(rng), b = dist(rng);
    CHECK(abs(chi_of(a * b) - chi_of(a) * chi_of(b)) <= 1e-12);
  }
}

TEST_CASE("CharacterTable matches chi_of and keeps unit modulus") {
  CharacterTable table(10000);
  CHECK(table.limit() == 10000);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    CHECK(abs(table.chi(n) - chi_of(n)) <= 1e-13);
  }
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    CHECK(abs(abs(table.chi(n)) - 1.0) <= 1e-10);
    CHECK(table.is_prime_at(n) == is_prime(n));
  }
  CHECK_THROWS_AS(table.chi(0), std::domain_error);
  CHECK_THROWS_AS(table.chi(10001), std::domain_error);
  CHECK_THROWS_AS(CharacterTable(0), std::domain_error);
  CharacterTable tiny(1);
  CHECK(tiny.chi(1) == std::complex<double>{1.0, 0.0});
}

TEST_CASE("table values are literal products of their factor entries") {
  CharacterTable table(4096);
  std::mt19937_64 rng(0x7ab1e);
  std::uniform_int_distribution<std::uint64_t> dist(2, 64);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t a = dist(rng), b = dist(rng);
    CHECK(abs(table.chi(a * b) - table.chi(a) * table.chi(b)) <= 1e-12);
  }
}

TEST_CASE("clamp_to_unit tolerates rounding spill but not corruption") {
  CHECK(clamp_to_unit(0.5) == 0.5);
  CHECK(clamp_to_unit(-1.0) == -1.0);
  CHECK(clamp_to_unit(1.0) == 1.0);
  CHECK(clamp_to_unit(std::nextafter(-1.0, -2.0)) == -1.0);
  CHECK(clamp_to_unit(1.0 + 5e-16) == 1.0);
  CHECK_THROWS_AS(clamp_to_unit(-1.1), std::domain_error);
  CHECK_THROWS_AS(clamp_to_unit(1.0 + 2e-15), std::domain_error);
}
