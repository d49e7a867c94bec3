#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "odflow/colorbrewer_data.hpp"
#include "odflow/error.hpp"
#include "odflow/numeric.hpp"

namespace odflow {

enum class ClassMethod { equal_interval, quantile, jenks, manual };

inline constexpr std::string_view to_string(ClassMethod m) {
  switch (m) {
    case ClassMethod::equal_interval: return "equal_interval";
    case ClassMethod::quantile: return "quantile";
    case ClassMethod::jenks: return "jenks";
    case ClassMethod::manual: return "manual";
  }
  return "";
}

inline std::optional<ClassMethod> parse_class_method(std::string_view s) {
  if (s == "equal_interval") return ClassMethod::equal_interval;
  if (s == "quantile") return ClassMethod::quantile;
  if (s == "jenks" || s == "natural_breaks") return ClassMethod::jenks;
  if (s == "manual") return ClassMethod::manual;
  return std::nullopt;
}

inline constexpr int kMinClasses = 2;
inline constexpr int kMaxClasses = 9;

/// Class breaks are inclusive upper bounds: class i holds values in
/// (breaks[i-1], breaks[i]], class 0 also holds everything <= breaks[0] and
/// the last class everything above the final break.
struct ClassificationResult {
  ClassMethod method = ClassMethod::equal_interval;
  int k = 0;
  std::vector<double> breaks;  // ascending, size k - 1
  double min = 0.0;
  double max = 0.0;

  int assign(double value) const {
    const auto it = std::lower_bound(breaks.begin(), breaks.end(), value);
    return static_cast<int>(it - breaks.begin());
  }

  double lower(int cls) const { return cls == 0 ? min : breaks[static_cast<std::size_t>(cls - 1)]; }
  double upper(int cls) const { return cls == k - 1 ? max : breaks[static_cast<std::size_t>(cls)]; }
};

namespace detail {

inline std::vector<double> sorted_copy(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  return v;
}

inline std::size_t distinct_count(const std::vector<double>& sorted) {
  if (sorted.empty()) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] != sorted[i - 1]) ++c;
  }
  return c;
}

/// Sum of squared deviations of sorted[i..j) via centered prefix sums.
class SegmentCost {
 public:
  explicit SegmentCost(const std::vector<double>& sorted) : s1_(sorted.size() + 1), s2_(sorted.size() + 1) {
    const double mean = sorted.empty() ? 0.0 : std::accumulate(sorted.begin(), sorted.end(), 0.0) /
                                                    static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const double x = sorted[i] - mean;
      s1_[i + 1] = s1_[i] + x;
      s2_[i + 1] = s2_[i] + x * x;
    }
  }
  double operator()(std::size_t i, std::size_t j) const {
    const double n = static_cast<double>(j - i);
    const double s = s1_[j] - s1_[i];
    return std::max(0.0, (s2_[j] - s2_[i]) - s * s / n);
  }

 private:
  std::vector<double> s1_, s2_;
};

// Fisher's exact optimal partition. Splits are only allowed between distinct
// values so that breaks stay strictly ascending.
inline std::vector<double> jenks_breaks(const std::vector<double>& x, int k) {
  const std::size_t n = x.size();
  const auto kk = static_cast<std::size_t>(k);
  const SegmentCost cost(x);
  constexpr double inf = std::numeric_limits<double>::infinity();
  // best[c][j]: min cost of the first j values split into c + 1 classes.
  std::vector<std::vector<double>> best(kk, std::vector<double>(n + 1, inf));
  std::vector<std::vector<std::size_t>> split(kk, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t j = 1; j <= n; ++j) best[0][j] = cost(0, j);
  for (std::size_t c = 1; c < kk; ++c) {
    for (std::size_t j = c + 1; j <= n; ++j) {
      for (std::size_t p = c; p < j; ++p) {
        if (x[p - 1] == x[p] || best[c - 1][p] == inf) continue;
        const double total = best[c - 1][p] + cost(p, j);
        if (total < best[c][j]) {
          best[c][j] = total;
          split[c][j] = p;
        }
      }
    }
  }
  std::vector<double> breaks(kk - 1);
  std::size_t j = n;
  for (std::size_t c = kk - 1; c >= 1; --c) {
    const std::size_t p = split[c][j];
    breaks[c - 1] = x[p - 1];
    j = p;
  }
  return breaks;
}

}  // namespace detail

/// Sum of within-class squared deviations from class means for a given
/// assignment; the natural-breaks objective.
inline double sdcm(std::span<const double> values, const ClassificationResult& cls) {
  std::vector<std::vector<double>> groups(static_cast<std::size_t>(cls.k));
  for (double v : values) groups[static_cast<std::size_t>(cls.assign(v))].push_back(v);
  double total = 0.0;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
    for (double v : g) total += (v - mean) * (v - mean);
  }
  return total;
}

inline ClassificationResult classify(std::span<const double> values, ClassMethod method, int k,
                                     std::span<const double> manual_breaks = {}) {
  if (values.empty()) throw Error(ErrorCode::empty_dataset, "cannot classify an empty value list");
  if (k < kMinClasses || k > kMaxClasses) {
    throw Error(ErrorCode::invalid_argument, "class count must be in [2, 9], got " + std::to_string(k));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::non_numeric_value, "classification values must be finite");
  }
  const auto x = detail::sorted_copy(values);
  ClassificationResult r;
  r.method = method;
  r.k = k;
  r.min = x.front();
  r.max = x.back();
  const auto n = x.size();
  const auto kk = static_cast<std::size_t>(k);

  switch (method) {
    case ClassMethod::equal_interval: {
      if (!(r.max > r.min)) {
        throw Error(ErrorCode::too_few_distinct_values, "equal interval needs at least two distinct values");
      }
      for (std::size_t i = 1; i < kk; ++i) {
        r.breaks.push_back(r.min + static_cast<double>(i) * (r.max - r.min) / static_cast<double>(k));
      }
      break;
    }
    case ClassMethod::quantile: {
      if (detail::distinct_count(x) < kk) {
        throw Error(ErrorCode::too_few_distinct_values,
                    "quantile with k = " + std::to_string(k) + " needs at least k distinct values");
      }
      for (std::size_t i = 1; i < kk; ++i) {
        const std::size_t pos = (i * n + kk - 1) / kk;  // ceil(i n / k), 1-based
        r.breaks.push_back(x[pos - 1]);
      }
      for (std::size_t i = 1; i < r.breaks.size(); ++i) {
        if (!(r.breaks[i] > r.breaks[i - 1])) {
          throw Error(ErrorCode::too_few_distinct_values, "quantile breaks collapse on tied values");
        }
      }
      if (!(r.breaks.back() < r.max)) {
        throw Error(ErrorCode::too_few_distinct_values, "last quantile break equals the maximum");
      }
      break;
    }
    case ClassMethod::jenks: {
      if (detail::distinct_count(x) < kk) {
        throw Error(ErrorCode::too_few_distinct_values,
                    "natural breaks with k = " + std::to_string(k) + " needs at least k distinct values");
      }
      r.breaks = detail::jenks_breaks(x, k);
      break;
    }
    case ClassMethod::manual: {
      if (manual_breaks.size() != kk - 1) {
        throw Error(ErrorCode::invalid_argument, "manual classification with k = " + std::to_string(k) +
                                                     " needs exactly " + std::to_string(k - 1) + " breaks");
      }
      for (std::size_t i = 0; i < manual_breaks.size(); ++i) {
        const double b = manual_breaks[i];
        if (i > 0 && !(b > manual_breaks[i - 1])) {
          throw Error(ErrorCode::invalid_argument, "manual breaks must be strictly increasing");
        }
        if (!(b >= r.min && b < r.max)) {
          throw Error(ErrorCode::breaks_out_of_range, "manual break " + format_shortest(b) +
                                                          " outside data range [" + format_shortest(r.min) + ", " +
                                                          format_shortest(r.max) + ")");
        }
      }
      r.breaks.assign(manual_breaks.begin(), manual_breaks.end());
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Visual variables

/// Linear map of [vmin, vmax] onto [wmin, wmax]; midpoint when vmin == vmax.
inline double proportional_width(double value, double vmin, double vmax, double wmin, double wmax) {
  if (!(vmax > vmin)) return (wmin + wmax) / 2.0;
  return wmin + (value - vmin) / (vmax - vmin) * (wmax - wmin);
}

/// Width (or radius) for a class index, evenly spaced across the range.
inline double class_width(int cls, int k, double wmin, double wmax) {
  if (k <= 1) return (wmin + wmax) / 2.0;
  return wmin + static_cast<double>(cls) * (wmax - wmin) / static_cast<double>(k - 1);
}

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;

  static Rgb from_packed(std::uint32_t c) {
    return {static_cast<std::uint8_t>((c >> 16) & 0xff), static_cast<std::uint8_t>((c >> 8) & 0xff),
            static_cast<std::uint8_t>(c & 0xff)};
  }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s = "#";
    for (auto c : {r, g, b}) {
      s.push_back(digits[c >> 4]);
      s.push_back(digits[c & 0xf]);
    }
    return s;
  }
};

inline std::optional<Rgb> parse_hex_color(std::string_view s) {
  if (s.size() != 7 || s[0] != '#') return std::nullopt;
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  int v[6];
  for (int i = 0; i < 6; ++i) {
    v[i] = nib(s[static_cast<std::size_t>(i) + 1]);
    if (v[i] < 0) return std::nullopt;
  }
  return Rgb{static_cast<std::uint8_t>(v[0] * 16 + v[1]), static_cast<std::uint8_t>(v[2] * 16 + v[3]),
             static_cast<std::uint8_t>(v[4] * 16 + v[5])};
}

/// Named ColorBrewer scheme with k colors. k = 2 takes the ends of the
/// 3-class scheme.
inline std::optional<std::vector<Rgb>> scheme_colors(std::string_view name, int k) {
  if (k < kMinClasses || k > kMaxClasses) return std::nullopt;
  const int lookup = std::max(k, 3);
  for (const auto& e : colorbrewer::kSchemes) {
    if (e.name == name && e.classes == lookup) {
      std::vector<Rgb> out;
      for (int i = 0; i < lookup; ++i) out.push_back(Rgb::from_packed(e.colors[static_cast<std::size_t>(i)]));
      if (k == 2) out = {out.front(), out.back()};
      return out;
    }
  }
  return std::nullopt;
}

inline std::vector<std::string_view> scheme_names() {
  std::vector<std::string_view> names;
  for (const auto& e : colorbrewer::kSchemes) {
    if (names.empty() || names.back() != e.name) names.push_back(e.name);
  }
  return names;
}

struct ColorRamp {
  enum class Mode { single, continuous, classified };
  Mode mode = Mode::single;
  Rgb from{};  // single color, or the low end of a continuous ramp
  Rgb to{};
  std::vector<Rgb> scheme;  // classified
};

inline std::uint8_t round_channel(double c) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(c + 0.5), 0.0, 255.0));
}

/// Per-channel linear interpolation in RGB at t = (value - vmin) / (vmax -
/// vmin), rounded half up. Single ramps return their color; classified ramps
/// are indexed by class, not interpolated, so they return the first color.
inline Rgb interpolate_color(double value, double vmin, double vmax, const ColorRamp& ramp) {
  if (ramp.mode == ColorRamp::Mode::single) return ramp.from;
  if (ramp.mode == ColorRamp::Mode::classified) return ramp.scheme.empty() ? ramp.from : ramp.scheme.front();
  const double t = vmax > vmin ? (value - vmin) / (vmax - vmin) : 0.5;
  auto lerp = [t](std::uint8_t a, std::uint8_t b) {
    return round_channel(static_cast<double>(a) + t * (static_cast<double>(b) - static_cast<double>(a)));
  };
  return {lerp(ramp.from.r, ramp.to.r), lerp(ramp.from.g, ramp.to.g), lerp(ramp.from.b, ramp.to.b)};
}

// ---------------------------------------------------------------------------
// Legends

struct LegendAnchor {
  double value = 0.0;  // representative value (min / mean / max, or class midpoint)
  double lower = 0.0;
  double upper = 0.0;
  int class_index = -1;  // -1 for proportional anchors
  std::string label;
};

inline std::vector<LegendAnchor> proportional_legend_values(std::span<const double> values, int decimals) {
  if (values.empty()) throw Error(ErrorCode::empty_dataset, "legend needs at least one value");
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double mean = exact_sum(values) / static_cast<double>(values.size());
  if (!(*mx > *mn)) {
    return {{*mn, *mn, *mn, -1, format_fixed(*mn, decimals)}};
  }
  std::vector<LegendAnchor> out;
  for (double v : {*mn, mean, *mx}) out.push_back({v, v, v, -1, format_fixed(v, decimals)});
  return out;
}

inline std::vector<LegendAnchor> classified_legend_values(const ClassificationResult& cls, int decimals) {
  std::vector<LegendAnchor> out;
  for (int i = 0; i < cls.k; ++i) {
    const double lo = cls.lower(i);
    const double hi = cls.upper(i);
    out.push_back({(lo + hi) / 2.0, lo, hi, i,
                   format_fixed(lo, decimals) + " – " + format_fixed(hi, decimals)});
  }
  return out;
}

}  // namespace odflow
