#pragma once

#include <optional>
#include <span>
#include <vector>

namespace ais::geo {

// Spherical earth, radius fixed at 6371 km exactly.
inline constexpr double kEarthRadiusKm = 6371.0;

struct GeoPoint {
  double lat_deg = 0.0;
  double lon_deg = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

// Axis-aligned lat/lon box, bounds inclusive.
struct BoundingBox {
  double min_lat = 0.0;
  double min_lon = 0.0;
  double max_lat = 0.0;
  double max_lon = 0.0;

  bool contains(GeoPoint p) const {
    return p.lat_deg >= min_lat && p.lat_deg <= max_lat &&
           p.lon_deg >= min_lon && p.lon_deg <= max_lon;
  }
};

// Closed polygon; the closing vertex may or may not repeat the first.
struct PolygonRing {
  std::vector<GeoPoint> vertices;
};

// Great-circle distance, haversine (atan2 form).
double haversine_km(GeoPoint a, GeoPoint b);

// Sum of consecutive haversine legs; 0 for fewer than 2 points.
double path_length_km(std::span<const GeoPoint> points);

// Forward azimuth from a to b in [0, 360); nullopt when a == b.
std::optional<double> initial_bearing_deg(GeoPoint a, GeoPoint b);

// Planar containment in lon/lat coordinates using the nonzero winding rule.
// Points on an edge or vertex count as inside. The AOI ring in the paper has a
// self-touching slit around Bornholm, where even-odd ray casting and the
// winding rule disagree — winding is the contract here.
bool point_in_polygon(GeoPoint p, const PolygonRing& ring);

// Area of the box as mid-latitude width times mid-longitude height, both
// measured with haversine. A trip-footprint summary, not surveying.
double bbox_area_km2(const BoundingBox& box);

// The study-area ring from the source material (80 vertices, closed).
const PolygonRing& baltic_aoi();

}  // namespace ais::geo
