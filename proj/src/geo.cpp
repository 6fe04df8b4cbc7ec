#include "aistrips/geo.hpp"

#include <cmath>

namespace ais::geo {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kDegToRad = kPi / 180.0;
}  // namespace

double haversine_km(GeoPoint a, GeoPoint b) {
  const double phi1 = a.lat_deg * kDegToRad;
  const double phi2 = b.lat_deg * kDegToRad;
  const double dphi = (b.lat_deg - a.lat_deg) * kDegToRad;
  const double dlam = (b.lon_deg - a.lon_deg) * kDegToRad;
  const double sp = std::sin(dphi / 2.0);
  const double sl = std::sin(dlam / 2.0);
  const double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
  return 2.0 * kEarthRadiusKm * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

double path_length_km(std::span<const GeoPoint> points) {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i)
    total += haversine_km(points[i - 1], points[i]);
  return total;
}

std::optional<double> initial_bearing_deg(GeoPoint a, GeoPoint b) {
  if (a == b) return std::nullopt;
  const double phi1 = a.lat_deg * kDegToRad;
  const double phi2 = b.lat_deg * kDegToRad;
  const double dlam = (b.lon_deg - a.lon_deg) * kDegToRad;
  const double x = std::sin(dlam) * std::cos(phi2);
  const double y =
      std::cos(phi1) * std::sin(phi2) - std::sin(phi1) * std::cos(phi2) * std::cos(dlam);
  double deg = std::atan2(x, y) / kDegToRad;
  deg = std::fmod(deg + 360.0, 360.0);
  return deg;
}

namespace {

// z component of (b - a) x (p - a) in lon/lat plane.
double cross(GeoPoint a, GeoPoint b, GeoPoint p) {
  return (b.lon_deg - a.lon_deg) * (p.lat_deg - a.lat_deg) -
         (p.lon_deg - a.lon_deg) * (b.lat_deg - a.lat_deg);
}

bool on_segment(GeoPoint a, GeoPoint b, GeoPoint p) {
  if (cross(a, b, p) != 0.0) return false;
  return p.lon_deg >= std::min(a.lon_deg, b.lon_deg) &&
         p.lon_deg <= std::max(a.lon_deg, b.lon_deg) &&
         p.lat_deg >= std::min(a.lat_deg, b.lat_deg) &&
         p.lat_deg <= std::max(a.lat_deg, b.lat_deg);
}

}  // namespace

bool point_in_polygon(GeoPoint p, const PolygonRing& ring) {
  const auto& v = ring.vertices;
  std::size_t n = v.size();
  if (n >= 2 && v.front() == v.back()) --n;  // ignore the explicit closing vertex
  if (n < 3) return false;

  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const GeoPoint a = v[i];
    const GeoPoint b = v[(i + 1) % n];
    if (on_segment(a, b, p)) return true;  // boundary counts as inside
    if (a.lat_deg <= p.lat_deg) {
      if (b.lat_deg > p.lat_deg && cross(a, b, p) > 0.0) ++winding;
    } else {
      if (b.lat_deg <= p.lat_deg && cross(a, b, p) < 0.0) --winding;
    }
  }
  return winding != 0;
}

double bbox_area_km2(const BoundingBox& box) {
  const double mid_lat = (box.min_lat + box.max_lat) / 2.0;
  const double mid_lon = (box.min_lon + box.max_lon) / 2.0;
  const double width =
      haversine_km({mid_lat, box.min_lon}, {mid_lat, box.max_lon});
  const double height =
      haversine_km({box.min_lat, mid_lon}, {box.max_lat, mid_lon});
  return width * height;
}

}  // namespace ais::geo
