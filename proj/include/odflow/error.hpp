#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace odflow {

enum class ErrorCode {
  invalid_argument,
  malformed_csv,
  missing_column,
  missing_value,
  non_numeric_value,
  non_negative_violation,
  coordinate_out_of_range,
  duplicate_node_id,
  unknown_node_reference,
  malformed_geojson,
  unsupported_geometry_type,
  ambiguous_key,
  degenerate_geometry,
  non_positive_population,
  zero_denominator,
  zero_distance,
  no_convergence,
  too_few_distinct_values,
  breaks_out_of_range,
  pole_singularity,
  unresolved_join,
  empty_dataset,
  invalid_project,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::malformed_csv: return "MalformedCsv";
    case ErrorCode::missing_column: return "MissingColumn";
    case ErrorCode::missing_value: return "MissingValue";
    case ErrorCode::non_numeric_value: return "NonNumericValue";
    case ErrorCode::non_negative_violation: return "NonNegativeViolation";
    case ErrorCode::coordinate_out_of_range: return "CoordinateOutOfRange";
    case ErrorCode::duplicate_node_id: return "DuplicateNodeId";
    case ErrorCode::unknown_node_reference: return "UnknownNodeReference";
    case ErrorCode::malformed_geojson: return "MalformedGeoJson";
    case ErrorCode::unsupported_geometry_type: return "UnsupportedGeometryType";
    case ErrorCode::ambiguous_key: return "AmbiguousKey";
    case ErrorCode::degenerate_geometry: return "DegenerateGeometry";
    case ErrorCode::non_positive_population: return "NonPositivePopulation";
    case ErrorCode::zero_denominator: return "ZeroDenominator";
    case ErrorCode::zero_distance: return "ZeroDistance";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::too_few_distinct_values: return "TooFewDistinctValues";
    case ErrorCode::breaks_out_of_range: return "BreaksOutOfRange";
    case ErrorCode::pole_singularity: return "PoleSingularity";
    case ErrorCode::unresolved_join: return "UnresolvedJoin";
    case ErrorCode::empty_dataset: return "EmptyDataset";
    case ErrorCode::invalid_project: return "InvalidProject";
  }
  return "Unknown";
}

/// Structured failure raised by every parsing, validation and numeric
/// routine. `details` carries per-item diagnostics (offending rows, join
/// report lines); `row` is the 1-based data row when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::string> details = {},
        std::optional<std::size_t> row = std::nullopt)
      : std::runtime_error(compose(code, message)),
        code_(code),
        message_(std::move(message)),
        details_(std::move(details)),
        row_(row) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& details() const noexcept { return details_; }
  std::optional<std::size_t> row() const noexcept { return row_; }

 private:
  static std::string compose(ErrorCode code, const std::string& message) {
    std::string s(to_string(code));
    s += ": ";
    s += message;
    return s;
  }

  ErrorCode code_;
  std::string message_;
  std::vector<std::string> details_;
  std::optional<std::size_t> row_;
};

}  // namespace odflow
