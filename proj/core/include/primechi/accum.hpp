#pragma once

#include <complex>

namespace primechi {

// Compensated (double-double) accumulator.  Each add() captures the exact
// rounding error of the running sum via TwoSum and folds it into a low-order
// word, so the final value carries an error of O(n * eps^2 * sum|x|) instead
// of O(n * eps * sum|x|).  That headroom matters: several partial sums in this
// library are checked against identities at 1e-12 relative to their own
// magnitude, and a few inequality margins (the Basel tail at N = 1e6, the log
// series bound near the sampling floor) are only a few 1e-13 wide.
class CompensatedSum {
 public:
  void add(double x) {
    const double s = hi_ + x;
    const double b = s - hi_;
    lo_ += (hi_ - (s - b)) + (x - b);
    hi_ = s;
  }
  double value() const { return hi_ + lo_; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

class ComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace primechi
