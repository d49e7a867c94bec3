#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "odflow/error.hpp"

namespace odflow {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegToRad = kPi / 180.0;

struct MapPoint {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const MapPoint&) const = default;
};

enum class ProjectionKind { mercator, robinson, gall_peters, albers };

enum class AlbersPreset { us, africa, australia, china, europe, south_america };

struct AlbersParams {
  double phi1 = 0.0;  // standard parallels, degrees
  double phi2 = 0.0;
  double phi0 = 0.0;  // latitude of origin
  double lambda0 = 0.0;  // central meridian
};

inline constexpr AlbersParams albers_params(AlbersPreset p) {
  switch (p) {
    case AlbersPreset::us: return {29.5, 45.5, 37.5, -96.0};
    case AlbersPreset::europe: return {43.0, 62.0, 52.5, 10.0};
    case AlbersPreset::africa: return {-18.0, 18.0, 0.0, 25.0};
    case AlbersPreset::south_america: return {-5.0, -42.0, -32.0, -60.0};
    case AlbersPreset::australia: return {-18.0, -36.0, -27.0, 134.0};
    case AlbersPreset::china: return {25.0, 47.0, 36.0, 105.0};
  }
  return {};
}

inline constexpr std::string_view to_string(AlbersPreset p) {
  switch (p) {
    case AlbersPreset::us: return "US";
    case AlbersPreset::africa: return "Africa";
    case AlbersPreset::australia: return "Australia";
    case AlbersPreset::china: return "China";
    case AlbersPreset::europe: return "Europe";
    case AlbersPreset::south_america: return "SouthAmerica";
  }
  return "";
}

inline std::optional<AlbersPreset> parse_albers_preset(std::string_view s) {
  for (auto p : {AlbersPreset::us, AlbersPreset::africa, AlbersPreset::australia, AlbersPreset::china,
                 AlbersPreset::europe, AlbersPreset::south_america}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

inline constexpr std::string_view to_string(ProjectionKind k) {
  switch (k) {
    case ProjectionKind::mercator: return "mercator";
    case ProjectionKind::robinson: return "robinson";
    case ProjectionKind::gall_peters: return "gall_peters";
    case ProjectionKind::albers: return "albers";
  }
  return "";
}

inline std::optional<ProjectionKind> parse_projection_kind(std::string_view s) {
  for (auto k : {ProjectionKind::mercator, ProjectionKind::robinson, ProjectionKind::gall_peters,
                 ProjectionKind::albers}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

struct ProjectionSpec {
  ProjectionKind kind = ProjectionKind::mercator;
  AlbersPreset preset = AlbersPreset::us;  // albers only

  std::string display_name() const {
    switch (kind) {
      case ProjectionKind::mercator: return "Mercator";
      case ProjectionKind::robinson: return "Robinson";
      case ProjectionKind::gall_peters: return "Gall-Peters";
      case ProjectionKind::albers: return "Albers Equal Area (" + std::string(to_string(preset)) + ")";
    }
    return "";
  }

  bool operator==(const ProjectionSpec&) const = default;
};

namespace robinson {

// Published Robinson table at 5 degree latitude steps: parallel length
// factor and distance-from-equator factor.
inline constexpr std::array<double, 19> kPlen = {1.0000, 0.9986, 0.9954, 0.9900, 0.9822, 0.9730, 0.9600,
                                                 0.9427, 0.9216, 0.8962, 0.8679, 0.8350, 0.7986, 0.7597,
                                                 0.7186, 0.6732, 0.6213, 0.5722, 0.5322};
inline constexpr std::array<double, 19> kPdfe = {0.0000, 0.0620, 0.1240, 0.1860, 0.2480, 0.3100, 0.3720,
                                                 0.4340, 0.4958, 0.5571, 0.6176, 0.6769, 0.7346, 0.7903,
                                                 0.8435, 0.8936, 0.9394, 0.9761, 1.0000};
inline constexpr double kXScale = 0.8487;
inline constexpr double kYScale = 1.3523;

}  // namespace robinson

namespace detail {

inline double wrap_radians(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a;
}

struct AlbersConstants {
  double n, c, rho0, lambda0;
  bool cylindrical;  // symmetric parallels: the n -> 0 limit
  double cos_phi1, sin_phi0;
};

inline AlbersConstants albers_constants(AlbersPreset preset) {
  const auto p = albers_params(preset);
  const double s1 = std::sin(p.phi1 * kDegToRad);
  const double s2 = std::sin(p.phi2 * kDegToRad);
  const double n = (s1 + s2) / 2.0;
  const double c1 = std::cos(p.phi1 * kDegToRad);
  const double c = c1 * c1 + 2.0 * n * s1;
  const double s0 = std::sin(p.phi0 * kDegToRad);
  if (std::fabs(n) < 1e-12) return {0.0, c, 0.0, p.lambda0 * kDegToRad, true, c1, s0};
  const double rho0 = std::sqrt(c - 2.0 * n * s0) / n;
  return {n, c, rho0, p.lambda0 * kDegToRad, false, c1, s0};
}

}  // namespace detail

/// Forward projection on the unit sphere. Input in degrees; y grows
/// northward.
inline MapPoint project_point(const ProjectionSpec& spec, double lon, double lat) {
  if (!std::isfinite(lon) || !std::isfinite(lat)) {
    throw Error(ErrorCode::invalid_argument, "coordinates must be finite");
  }
  const double lam = lon * kDegToRad;
  const double phi = lat * kDegToRad;
  switch (spec.kind) {
    case ProjectionKind::mercator: {
      if (std::fabs(lat) >= 90.0) {
        throw Error(ErrorCode::pole_singularity, "mercator is undefined at latitude " + std::to_string(lat));
      }
      return {lam, std::log(std::tan(kPi / 4.0 + phi / 2.0))};
    }
    case ProjectionKind::gall_peters:
      return {lam / std::sqrt(2.0), std::sqrt(2.0) * std::sin(phi)};
    case ProjectionKind::robinson: {
      const double a = std::min(std::fabs(lat), 90.0);
      auto idx = static_cast<std::size_t>(a / 5.0);
      if (idx >= 18) idx = 17;
      const double t = (a - 5.0 * static_cast<double>(idx)) / 5.0;
      const double plen = robinson::kPlen[idx] + t * (robinson::kPlen[idx + 1] - robinson::kPlen[idx]);
      const double pdfe = robinson::kPdfe[idx] + t * (robinson::kPdfe[idx + 1] - robinson::kPdfe[idx]);
      return {robinson::kXScale * plen * lam, robinson::kYScale * pdfe * (lat < 0 ? -1.0 : 1.0)};
    }
    case ProjectionKind::albers: {
      const auto k = detail::albers_constants(spec.preset);
      if (k.cylindrical) {
        return {k.cos_phi1 * detail::wrap_radians(lam - k.lambda0), (std::sin(phi) - k.sin_phi0) / k.cos_phi1};
      }
      const double rho = std::sqrt(k.c - 2.0 * k.n * std::sin(phi)) / k.n;
      const double theta = k.n * detail::wrap_radians(lam - k.lambda0);
      return {rho * std::sin(theta), k.rho0 - rho * std::cos(theta)};
    }
  }
  return {};
}

/// Inverse for the projections that have a closed form (mercator, albers,
/// gall_peters). Returns (lon, lat) in radians.
inline std::optional<MapPoint> inverse_project_radians(const ProjectionSpec& spec, MapPoint p) {
  switch (spec.kind) {
    case ProjectionKind::mercator:
      return MapPoint{p.x, 2.0 * std::atan(std::exp(p.y)) - kPi / 2.0};
    case ProjectionKind::gall_peters:
      return MapPoint{p.x * std::sqrt(2.0), std::asin(std::clamp(p.y / std::sqrt(2.0), -1.0, 1.0))};
    case ProjectionKind::albers: {
      const auto k = detail::albers_constants(spec.preset);
      if (k.cylindrical) {
        const double s = std::clamp(p.y * k.cos_phi1 + k.sin_phi0, -1.0, 1.0);
        return MapPoint{k.lambda0 + p.x / k.cos_phi1, std::asin(s)};
      }
      const double sgn = k.n < 0 ? -1.0 : 1.0;
      const double dy = k.rho0 - p.y;
      const double rho = sgn * std::sqrt(p.x * p.x + dy * dy);
      const double theta = std::atan2(sgn * p.x, sgn * dy);
      const double s = std::clamp((k.c - rho * rho * k.n * k.n) / (2.0 * k.n), -1.0, 1.0);
      return MapPoint{k.lambda0 + theta / k.n, std::asin(s)};
    }
    case ProjectionKind::robinson:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace odflow
