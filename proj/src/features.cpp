#include "aistrips/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aistrips/geo.hpp"

namespace ais {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDegToRad = 3.141592653589793238462643383279502884 / 180.0;

double median_of_sorted(const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

struct Stats {
  double min, max, mean, median, std;
};

// Population moments.
Stats stats_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {v.front(), v.back(), mean, median_of_sorted(v),
          std::sqrt(ss / static_cast<double>(v.size()))};
}

}  // namespace

std::optional<ShapeFeatures> shape_features(const VesselDims& dims) {
  const double length = dims.a_m + dims.b_m;
  const double width = dims.c_m + dims.d_m;
  if (length <= 0.0 || width <= 0.0) return std::nullopt;
  ShapeFeatures f;
  f.length_m = length;
  f.width_m = width;
  f.aspect_ratio = width / length;
  f.naive_perimeter_m = 2.0 * (length + width);
  f.naive_area_m2 = length * width;
  f.shape_complexity = (length + width) * (length + width) / (length * width);
  f.bridge_position_ratio = dims.a_m / length;
  return f;
}

std::optional<KinematicFeatures> kinematic_features(const Trajectory& traj) {
  const auto& recs = traj.records;

  std::vector<double> sog;
  sog.reserve(recs.size());
  for (const AisRecord& r : recs)
    if (r.sog_knots) sog.push_back(*r.sog_knots);
  if (sog.empty()) return std::nullopt;

  // Course series: reported COG, else the bearing to the next point; the last
  // record falls back to the bearing of its incoming leg.
  std::vector<double> cog;
  cog.reserve(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].cog_deg) {
      cog.push_back(*recs[i].cog_deg);
      continue;
    }
    std::optional<double> b;
    if (i + 1 < recs.size())
      b = geo::initial_bearing_deg(recs[i].position, recs[i + 1].position);
    else if (i > 0)
      b = geo::initial_bearing_deg(recs[i - 1].position, recs[i].position);
    if (b) cog.push_back(*b);
  }

  KinematicFeatures f;
  const Stats s = stats_of(std::move(sog));
  f.sog_min = s.min;
  f.sog_max = s.max;
  f.sog_mean = s.mean;
  f.sog_median = s.median;
  f.sog_std = s.std;

  if (cog.empty()) {
    f.cog_min = f.cog_max = f.cog_mean = f.cog_median = f.cog_std = kNaN;
    f.init_cos = f.init_sin = kNaN;
  } else {
    const double first_course = cog.front();
    const Stats c = stats_of(std::move(cog));
    f.cog_min = c.min;
    f.cog_max = c.max;
    f.cog_mean = c.mean;
    f.cog_median = c.median;
    f.cog_std = c.std;
    f.init_cos = std::cos(first_course * kDegToRad);
    f.init_sin = std::sin(first_course * kDegToRad);
  }
  return f;
}

GeoTemporalFeatures geotemporal_features(const Trajectory& traj) {
  const auto& recs = traj.records;
  GeoTemporalFeatures f;
  f.trip_duration_s = static_cast<double>(traj.trip_end - traj.trip_start);
  f.n_positions = static_cast<double>(recs.size());

  std::vector<geo::GeoPoint> pts;
  pts.reserve(recs.size());
  for (const AisRecord& r : recs) pts.push_back(r.position);

  f.trajectory_length_km = geo::path_length_km(pts);
  f.endpoint_distance_km = geo::haversine_km(pts.front(), pts.back());
  f.directness_ratio = f.trajectory_length_km > 0.0
                           ? f.endpoint_distance_km / f.trajectory_length_km
                           : 0.0;

  f.min_lat = f.max_lat = pts.front().lat_deg;
  f.min_lon = f.max_lon = pts.front().lon_deg;
  for (const geo::GeoPoint& p : pts) {
    f.min_lat = std::min(f.min_lat, p.lat_deg);
    f.max_lat = std::max(f.max_lat, p.lat_deg);
    f.min_lon = std::min(f.min_lon, p.lon_deg);
    f.max_lon = std::max(f.max_lon, p.lon_deg);
  }
  f.lat_span = f.max_lat - f.min_lat;
  f.lon_span = f.max_lon - f.min_lon;
  f.total_km2 = geo::bbox_area_km2({f.min_lat, f.min_lon, f.max_lat, f.max_lon});
  return f;
}

std::optional<FeatureRow> assemble(const Trajectory& traj, bool require_label,
                                   AssembleCounters& counters) {
  const StaticInfo& st = traj.records.front().statics;

  std::optional<ShapeFeatures> shape;
  if (st.a_m && st.b_m && st.c_m && st.d_m)
    shape = shape_features({*st.a_m, *st.b_m, *st.c_m, *st.d_m});
  if (!shape) {
    ++counters.missing_dims;
    return std::nullopt;
  }

  auto kin = kinematic_features(traj);
  if (!kin) {
    ++counters.missing_sog;
    return std::nullopt;
  }

  if (require_label && !st.ship_type) {
    ++counters.missing_ship_type;
    return std::nullopt;
  }

  FeatureRow row;
  row.mmsi = traj.mmsi;
  row.trip_id = traj.trip_id;
  row.trip_start = traj.trip_start;
  row.trip_end = traj.trip_end;
  row.ship_type = st.ship_type;
  row.cargo_type = st.cargo_type;
  row.callsign = st.callsign;
  row.name = st.name;
  row.destination = st.destination;
  row.mobile_type = traj.records.front().mobile_type;
  row.shape = *shape;
  row.kin = *kin;
  row.geo = geotemporal_features(traj);
  return row;
}

const std::array<std::string, kModelFeatureCount>& model_feature_names() {
  static const std::array<std::string, kModelFeatureCount> names = {
      "cargo_type",
      "trip_duration_s",
      "n_positions",
      "trajectory_length_km",
      "endpoint_distance_km",
      "directness_ratio",
      "min_lat",
      "max_lat",
      "min_lon",
      "max_lon",
      "lat_span",
      "lon_span",
      "sog_min",
      "sog_max",
      "sog_mean",
      "sog_median",
      "sog_std",
      "cog_min",
      "cog_max",
      "cog_mean",
      "cog_median",
      "cog_std",
      "init_cos",
      "init_sin",
      "naive_perimeter_m",
      "naive_area_m2",
      "aspect_ratio",
      "shape_complexity",
      "bridge_position_ratio",
      "mobile_type",
      "total_km2",
  };
  return names;
}

std::array<double, kModelFeatureCount> numeric_feature_slots(const FeatureRow& row) {
  return {
      kNaN,  // cargo_type, encoded later
      row.geo.trip_duration_s,
      row.geo.n_positions,
      row.geo.trajectory_length_km,
      row.geo.endpoint_distance_km,
      row.geo.directness_ratio,
      row.geo.min_lat,
      row.geo.max_lat,
      row.geo.min_lon,
      row.geo.max_lon,
      row.geo.lat_span,
      row.geo.lon_span,
      row.kin.sog_min,
      row.kin.sog_max,
      row.kin.sog_mean,
      row.kin.sog_median,
      row.kin.sog_std,
      row.kin.cog_min,
      row.kin.cog_max,
      row.kin.cog_mean,
      row.kin.cog_median,
      row.kin.cog_std,
      row.kin.init_cos,
      row.kin.init_sin,
      row.shape.naive_perimeter_m,
      row.shape.naive_area_m2,
      row.shape.aspect_ratio,
      row.shape.shape_complexity,
      row.shape.bridge_position_ratio,
      kNaN,  // mobile_type, encoded later
      row.geo.total_km2,
  };
}

}  // namespace ais
