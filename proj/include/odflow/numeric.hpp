#pragma once

#include <charconv>
#include <initializer_list>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace odflow {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Parses a plain decimal real ("12", "-3.5", "1e6"). Thousands separators,
/// hex, inf and nan are rejected; surrounding whitespace is ignored.
inline std::optional<double> parse_decimal(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') {
    text.remove_prefix(1);
    if (text.empty() || text.front() == '-' || text.front() == '+') return std::nullopt;
  }
  for (char c : text) {
    const bool ok = (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E';
    if (!ok) return std::nullopt;
  }
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

/// Shortest decimal text that parses back to exactly `value`.
inline std::string format_shortest(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

/// Fixed-point text with `decimals` fractional digits, rounding half away
/// from zero on the shortest round-trip decimal expansion of `value`, so
/// 0.125 -> "0.13" and 2.675 -> "2.68". Negative zero prints without sign.
inline std::string format_fixed(double value, int decimals) {
  if (decimals < 0) decimals = 0;
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  std::string s(buf, ec == std::errc{} ? ptr : buf);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.erase(0, 1);
  }
  std::string int_part = s;
  std::string frac_part;
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  const auto keep = static_cast<std::size_t>(decimals);
  bool round_up = frac_part.size() > keep && frac_part[keep] >= '5';
  if (frac_part.size() > keep) frac_part.resize(keep);
  while (frac_part.size() < keep) frac_part.push_back('0');

  std::string digits = int_part + frac_part;
  if (round_up) {
    int i = static_cast<int>(digits.size()) - 1;
    while (i >= 0) {
      if (digits[static_cast<std::size_t>(i)] == '9') {
        digits[static_cast<std::size_t>(i)] = '0';
        --i;
      } else {
        ++digits[static_cast<std::size_t>(i)];
        break;
      }
    }
    if (i < 0) digits.insert(digits.begin(), '1');
  }
  const std::size_t int_len = digits.size() - keep;
  std::string out = digits.substr(0, int_len);
  if (keep > 0) {
    out += '.';
    out += digits.substr(int_len);
  }
  const bool all_zero = out.find_first_not_of("0.") == std::string::npos;
  if (negative && !all_zero) out.insert(out.begin(), '-');
  return out;
}

/// Correctly rounded sum of `values` (Shewchuk partials). The result does
/// not depend on the order of the inputs.
inline double exact_sum(std::span<const double> values) {
  std::vector<double> partials;
  for (double x : values) {
    std::size_t i = 0;
    for (double y : partials) {
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials[i++] = lo;
      x = hi;
    }
    partials.resize(i);
    partials.push_back(x);
  }
  if (partials.empty()) return 0.0;
  // Round the partials to a single double, handling the half-way case.
  auto n = partials.size();
  double hi = partials[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = partials[--n];
    hi = x + y;
    const double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  if (n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) || (lo > 0.0 && partials[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

inline double exact_sum(std::initializer_list<double> values) {
  return exact_sum(std::span<const double>(values.begin(), values.size()));
}

}  // namespace odflow
