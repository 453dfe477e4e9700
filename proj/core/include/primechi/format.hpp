#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace primechi {

// All user-facing numeric output is fixed at 10 decimal digits, round half to
// even, '.' separator, locale-independent.  Values that round to zero are
// canonicalized to "0.0000000000" (no negative zero).
std::string format_fixed10(double x);

// "a+bi" / "a-bi", both parts fixed at 10 decimals.
std::string format_complex10(std::complex<double> z);

// Shortest representation that round-trips exactly through from_chars.
// Used for machine-readable snapshots, never for display.
std::string format_exact(double x);

// Strict decimal parse of a full token ("-0.5", "14.134725", "1e-6").
// Rejects trailing junk, empty input, inf/nan.
std::optional<double> parse_double(std::string_view s);

// "RE,IM" pair, e.g. "0.5,14.134725".
std::optional<std::complex<double>> parse_complex_pair(std::string_view s);

}  // namespace primechi
