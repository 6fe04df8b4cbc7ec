#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "aistrips/geo.hpp"
#include "aistrips/rng.hpp"
#include "oracles.hpp"

using ais::Rng;
using ais::geo::BoundingBox;
using ais::geo::GeoPoint;
using ais::geo::PolygonRing;

namespace {

GeoPoint random_point(Rng& rng, double lat_lo, double lat_hi, double lon_lo,
                      double lon_hi) {
  return {lat_lo + rng.uniform() * (lat_hi - lat_lo),
          lon_lo + rng.uniform() * (lon_hi - lon_lo)};
}

}  // namespace

TEST_CASE("haversine basics") {
  const GeoPoint a{55.0, 14.0};
  CHECK(ais::geo::haversine_km(a, a) == 0.0);

  // One degree of longitude at 55N, checked against the closed form
  // R * acos(sin^2(55) + cos^2(55) * cos(1 deg)).
  const GeoPoint b{55.0, 15.0};
  CHECK(ais::geo::haversine_km(a, b) ==
        doctest::Approx(63.778246574748124).epsilon(1e-12));

  // One degree of latitude is R * pi / 180 regardless of longitude.
  CHECK(ais::geo::haversine_km({54.0, 14.0}, {55.0, 14.0}) ==
        doctest::Approx(111.19492664455873).epsilon(1e-12));

  // Antipodal pair: half the circumference.
  CHECK(ais::geo::haversine_km({90.0, 0.0}, {-90.0, 0.0}) ==
        doctest::Approx(6371.0 * oracle::kPi).epsilon(1e-12));
}

TEST_CASE("haversine symmetry and triangle inequality") {
  Rng rng(20240601);
  for (int i = 0; i < 2000; ++i) {
    const GeoPoint p = random_point(rng, -85, 85, -180, 180);
    const GeoPoint q = random_point(rng, -85, 85, -180, 180);
    const GeoPoint r = random_point(rng, -85, 85, -180, 180);
    const double pq = ais::geo::haversine_km(p, q);
    const double qp = ais::geo::haversine_km(q, p);
    CHECK(pq == qp);
    CHECK(pq >= 0.0);
    const double pr = ais::geo::haversine_km(p, r);
    const double rq = ais::geo::haversine_km(r, q);
    CHECK(pq <= pr + rq + 1e-9);
  }
}

TEST_CASE("haversine agrees with law-of-cosines oracle") {
  // Random pairs over the study region; the two formulas are independent
  // derivations and should agree to far better than 1e-6 relative at these
  // separations.
  Rng rng(7701);
  for (int i = 0; i < 10000; ++i) {
    const GeoPoint p = random_point(rng, 53.0, 62.0, 4.0, 20.0);
    const GeoPoint q = random_point(rng, 53.0, 62.0, 4.0, 20.0);
    const double got = ais::geo::haversine_km(p, q);
    const double want = oracle::slc_distance_km(p, q);
    const double scale = std::max(1.0, want);
    CHECK(std::abs(got - want) / scale <= 1e-6);
  }
}

TEST_CASE("path length") {
  std::vector<GeoPoint> pts;
  CHECK(ais::geo::path_length_km(pts) == 0.0);
  pts.push_back({55.0, 14.0});
  CHECK(ais::geo::path_length_km(pts) == 0.0);
  pts.push_back({55.0, 15.0});
  CHECK(ais::geo::path_length_km(pts) ==
        doctest::Approx(63.778246574748124).epsilon(1e-12));
  pts.push_back({55.5, 15.0});

  double legs = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    legs += ais::geo::haversine_km(pts[i - 1], pts[i]);
  CHECK(ais::geo::path_length_km(pts) == doctest::Approx(legs).epsilon(1e-15));

  // Reversal leaves the length unchanged.
  std::vector<GeoPoint> rev(pts.rbegin(), pts.rend());
  CHECK(ais::geo::path_length_km(rev) ==
        doctest::Approx(ais::geo::path_length_km(pts)).epsilon(1e-15));
}

TEST_CASE("initial bearing cardinal directions") {
  const GeoPoint o{55.0, 14.0};
  CHECK(ais::geo::initial_bearing_deg(o, {56.0, 14.0}) ==
        doctest::Approx(0.0));
  CHECK(*ais::geo::initial_bearing_deg(o, {55.0, 15.0}) ==
        doctest::Approx(90.0).epsilon(0.02));
  CHECK(*ais::geo::initial_bearing_deg(o, {55.0, 13.0}) ==
        doctest::Approx(270.0).epsilon(0.02));
  CHECK(*ais::geo::initial_bearing_deg(o, {54.0, 14.0}) ==
        doctest::Approx(180.0));
  CHECK_FALSE(ais::geo::initial_bearing_deg(o, o).has_value());
}

TEST_CASE("initial bearing range") {
  Rng rng(5150);
  for (int i = 0; i < 2000; ++i) {
    const GeoPoint p = random_point(rng, -80, 80, -180, 180);
    const GeoPoint q = random_point(rng, -80, 80, -180, 180);
    if (p == q) continue;
    const auto bearing = ais::geo::initial_bearing_deg(p, q);
    REQUIRE(bearing.has_value());
    CHECK(*bearing >= 0.0);
    CHECK(*bearing < 360.0);
  }
}

TEST_CASE("point in polygon on a unit square") {
  PolygonRing square;
  square.vertices = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  CHECK(ais::geo::point_in_polygon({0.5, 0.5}, square));
  CHECK(ais::geo::point_in_polygon({0.0, 0.5}, square));   // edge
  CHECK(ais::geo::point_in_polygon({1.0, 1.0}, square));   // vertex
  CHECK_FALSE(ais::geo::point_in_polygon({1.5, 0.5}, square));
  CHECK_FALSE(ais::geo::point_in_polygon({-0.1, -0.1}, square));
}

TEST_CASE("winding rule beats even-odd on a self-touching ring") {
  // Outer square with a slit down to an inner square traced in the same
  // direction: the inner square region has winding number 2, so it is inside
  // under the nonzero rule but outside under even-odd.
  PolygonRing ring;
  ring.vertices = {{0, 0}, {0, 4}, {4, 4}, {4, 0}, {2, 0},
                   {1, 1}, {1, 3}, {3, 3}, {3, 1}, {1, 1},
                   {2, 0}};
  CHECK(ais::geo::point_in_polygon({2.0, 2.0}, ring));  // winding 2
  CHECK(ais::geo::point_in_polygon({3.5, 2.0}, ring));  // winding 1
  CHECK_FALSE(ais::geo::point_in_polygon({5.0, 2.0}, ring));
}

TEST_CASE("study area ring containment") {
  const PolygonRing& aoi = ais::geo::baltic_aoi();
  REQUIRE(aoi.vertices.size() >= 80);

  CHECK(ais::geo::point_in_polygon({55.0, 14.7}, aoi));
  CHECK(ais::geo::point_in_polygon({55.15, 14.2}, aoi));
  CHECK(ais::geo::point_in_polygon({54.6, 14.5}, aoi));
  CHECK(ais::geo::point_in_polygon({55.2, 15.1}, aoi));

  CHECK_FALSE(ais::geo::point_in_polygon({55.10, 14.70}, aoi));
  CHECK_FALSE(ais::geo::point_in_polygon({55.1, 14.9}, aoi));  // Bornholm land
  CHECK_FALSE(ais::geo::point_in_polygon({0.0, 0.0}, aoi));
  CHECK_FALSE(ais::geo::point_in_polygon({56.5, 12.0}, aoi));
}

TEST_CASE("point in polygon agrees with winding oracle over the study ring") {
  const PolygonRing& aoi = ais::geo::baltic_aoi();
  Rng rng(31337);
  int inside = 0;
  for (int i = 0; i < 10000; ++i) {
    const GeoPoint p = random_point(rng, 53.0, 57.0, 11.0, 17.0);
    const bool got = ais::geo::point_in_polygon(p, aoi);
    const bool want = oracle::winding_inside(p, aoi);
    CHECK(got == want);
    inside += got ? 1 : 0;
  }
  // Sanity: the sample rectangle straddles the ring, so both labels occur.
  CHECK(inside > 100);
  CHECK(inside < 9900);
}

TEST_CASE("bbox area") {
  BoundingBox degenerate{55.0, 14.0, 55.0, 15.0};
  CHECK(ais::geo::bbox_area_km2(degenerate) == 0.0);

  BoundingBox box{54.5, 14.0, 55.5, 15.0};
  CHECK(ais::geo::bbox_area_km2(box) ==
        doctest::Approx(7091.817449397697).epsilon(1e-12));

  // Width is measured at the mid latitude of the box.
  const double w =
      ais::geo::haversine_km({55.0, 14.0}, {55.0, 15.0});
  const double h =
      ais::geo::haversine_km({54.5, 14.0}, {55.5, 14.0});
  CHECK(ais::geo::bbox_area_km2(box) == doctest::Approx(w * h).epsilon(1e-15));
}

TEST_CASE("bbox area grows with lon span") {
  Rng rng(424242);
  for (int i = 0; i < 100; ++i) {
    const double lat0 = 53.0 + rng.uniform() * 4.0;
    const double lat1 = lat0 + 0.1 + rng.uniform();
    const double lon0 = 11.0 + rng.uniform() * 4.0;
    const double span = 0.1 + rng.uniform();
    BoundingBox narrow{lat0, lon0, lat1, lon0 + span};
    BoundingBox wide{lat0, lon0, lat1, lon0 + span + 0.5};
    CHECK(ais::geo::bbox_area_km2(wide) > ais::geo::bbox_area_km2(narrow));
  }
}
