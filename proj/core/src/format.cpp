#include "primechi/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace primechi {

std::string format_fixed10(double x) {
  std::array<char, 512> buf;  // fixed notation can get long far from 1.0
  auto r = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                         std::chars_format::fixed, 10);
  std::string s(buf.data(), r.ptr);
  if (s == "-0.0000000000") s.erase(0, 1);
  return s;
}

std::string format_complex10(std::complex<double> z) {
  std::string s = format_fixed10(z.real());
  std::string im = format_fixed10(z.imag());
  if (im[0] != '-') s += '+';
  s += im;
  s += 'i';
  return s;
}

std::string format_exact(double x) {
  std::array<char, 64> buf;
  auto r = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), r.ptr);
}

std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::complex<double>> parse_complex_pair(std::string_view s) {
  auto comma = s.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  if (s.find(',', comma + 1) != std::string_view::npos) return std::nullopt;
  auto re = parse_double(s.substr(0, comma));
  auto im = parse_double(s.substr(comma + 1));
  if (!re || !im) return std::nullopt;
  return std::complex<double>{*re, *im};
}

}  // namespace primechi
