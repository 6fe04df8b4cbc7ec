#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aistrips/segmentation.hpp"

namespace ais {

// AIS antenna offsets per the static message: A bow, B stern, C port,
// D starboard, all meters.
struct VesselDims {
  double a_m = 0.0;
  double b_m = 0.0;
  double c_m = 0.0;
  double d_m = 0.0;
};

struct ShapeFeatures {
  double length_m = 0.0;  // L = A + B
  double width_m = 0.0;   // W = C + D
  double aspect_ratio = 0.0;           // W / L
  double naive_perimeter_m = 0.0;      // 2 (L + W)
  double naive_area_m2 = 0.0;          // L * W
  double shape_complexity = 0.0;       // (L + W)^2 / (L W), >= 4 by AM-GM
  double bridge_position_ratio = 0.0;  // A / L, in [0, 1]
};

// nullopt when L or W would be zero (missing/zeroed dims).
std::optional<ShapeFeatures> shape_features(const VesselDims& dims);

// Speed/course order statistics. COG fields fall back to computed bearings
// where reports are missing and go NaN when the trip has no usable course at
// all (such rows are dropped later, during dataset preparation).
struct KinematicFeatures {
  double sog_min = 0.0, sog_max = 0.0, sog_mean = 0.0, sog_median = 0.0, sog_std = 0.0;
  double cog_min = 0.0, cog_max = 0.0, cog_mean = 0.0, cog_median = 0.0, cog_std = 0.0;
  double init_cos = 0.0, init_sin = 0.0;
};

// nullopt when no record carries SOG.
std::optional<KinematicFeatures> kinematic_features(const Trajectory& traj);

struct GeoTemporalFeatures {
  double trip_duration_s = 0.0;
  double n_positions = 0.0;
  double trajectory_length_km = 0.0;
  double endpoint_distance_km = 0.0;
  double directness_ratio = 0.0;  // endpoint / length, 0 when length == 0
  double min_lat = 0.0, max_lat = 0.0, min_lon = 0.0, max_lon = 0.0;
  double lat_span = 0.0, lon_span = 0.0;
  double total_km2 = 0.0;  // bounding-box area
};

// Requires >= 2 records.
GeoTemporalFeatures geotemporal_features(const Trajectory& traj);

// One trip's full feature record: identifiers, label, categoricals, and the
// numeric features. length_m/width_m ride along for completeness but are not
// model inputs (only their derived forms are).
struct FeatureRow {
  std::int64_t mmsi = 0;
  std::int64_t trip_id = 0;
  std::int64_t trip_start = 0;
  std::int64_t trip_end = 0;
  std::optional<std::string> ship_type;  // the label; may be absent in backfill
  std::optional<std::string> cargo_type;
  std::optional<std::string> callsign;
  std::optional<std::string> name;
  std::optional<std::string> destination;
  MobileType mobile_type = MobileType::Unknown;
  ShapeFeatures shape;
  KinematicFeatures kin;
  GeoTemporalFeatures geo;
};

struct AssembleCounters {
  std::uint64_t missing_dims = 0;
  std::uint64_t missing_sog = 0;
  std::uint64_t missing_ship_type = 0;
};

// Trajectory -> FeatureRow, or nullopt with the skip reason counted. Static
// fields must already be filled. With require_label=false (backfill), rows
// without a ship type pass through with the label absent.
std::optional<FeatureRow> assemble(const Trajectory& traj, bool require_label,
                                   AssembleCounters& counters);

// The 31 model features, fixed order (source feature table order with
// identifiers and label dropped).
inline constexpr std::size_t kModelFeatureCount = 31;
const std::array<std::string, kModelFeatureCount>& model_feature_names();

// Numeric model features pulled from a row in canonical order. The two
// categorical slots (cargo type, mobile type) are filled with NaN here and
// overwritten with encoded values during dataset preparation.
std::array<double, kModelFeatureCount> numeric_feature_slots(const FeatureRow& row);

inline constexpr std::size_t kCargoFeatureIndex = 0;
inline constexpr std::size_t kMobileFeatureIndex = 29;

}  // namespace ais
