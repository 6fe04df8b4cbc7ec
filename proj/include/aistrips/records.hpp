#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "aistrips/geo.hpp"

namespace ais {

// Self-reported navigational status. Only the variants the pipeline acts on
// get their own enumerator; everything else folds into Other, and an empty or
// unparseable field is Unknown. Statuses are notoriously unreliable, so the
// cleaning rules only ever *drop* on them, never trust them for segmentation.
enum class NavStatus {
  UnderWayUsingEngine,
  UnderWaySailing,
  Moored,
  AtAnchor,
  ConstrainedByDraught,
  EngagedInFishing,
  Other,
  Unknown,
};

enum class MobileType {
  ClassA,
  ClassB,
  BaseStation,
  SarAirborne,
  AtoN,
  Other,
  Unknown,
};

NavStatus nav_status_from_string(std::string_view s);
std::string_view to_string(NavStatus s);

MobileType mobile_type_from_string(std::string_view s);
std::string_view to_string(MobileType t);

// Static/voyage fields. All optional: AIS static messages arrive sporadically
// and most position reports carry none of this.
struct StaticInfo {
  std::optional<std::string> imo;
  std::optional<std::string> callsign;
  std::optional<std::string> name;
  std::optional<std::string> ship_type;
  std::optional<std::string> cargo_type;
  std::optional<double> width_m;
  std::optional<double> length_m;
  std::optional<std::string> pos_fix_device;
  std::optional<double> draught_m;
  std::optional<std::string> destination;
  std::optional<std::string> eta;
  std::optional<std::string> data_source;
  std::optional<double> a_m;  // antenna to bow
  std::optional<double> b_m;  // antenna to stern
  std::optional<double> c_m;  // antenna to port
  std::optional<double> d_m;  // antenna to starboard
};

struct AisRecord {
  std::int64_t timestamp = 0;  // unix seconds UTC
  std::int64_t mmsi = 0;
  geo::GeoPoint position{};
  NavStatus nav_status = NavStatus::Unknown;
  MobileType mobile_type = MobileType::Unknown;
  std::optional<double> sog_knots;
  std::optional<double> cog_deg;
  std::optional<double> heading_deg;
  std::optional<double> rot;
  StaticInfo statics;
};

}  // namespace ais
