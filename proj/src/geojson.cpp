#include "aistrips/geojson.hpp"

#include <fstream>

#include "aistrips/common.hpp"
#include "aistrips/timeutil.hpp"

namespace ais {

using nlohmann::ordered_json;

ordered_json trips_to_geojson(
    const std::vector<Trajectory>& trips,
    const std::unordered_map<std::int64_t, std::string>& predicted) {
  ordered_json fc;
  fc["type"] = "FeatureCollection";
  ordered_json features = ordered_json::array();
  for (const Trajectory& trip : trips) {
    ordered_json coords = ordered_json::array();
    double sog_sum = 0.0;
    std::size_t sog_n = 0;
    for (const AisRecord& rec : trip.records) {
      coords.push_back({rec.position.lon_deg, rec.position.lat_deg});
      if (rec.sog_knots) {
        sog_sum += *rec.sog_knots;
        ++sog_n;
      }
    }
    ordered_json props;
    props["mmsi"] = trip.mmsi;
    props["trip_id"] = trip.trip_id;
    const auto& ship_type = trip.records.front().statics.ship_type;
    props["ship_type_true"] = ship_type ? ordered_json(*ship_type) : ordered_json(nullptr);
    auto pred = predicted.find(trip.trip_id);
    props["ship_type_pred"] =
        pred != predicted.end() ? ordered_json(pred->second) : ordered_json(nullptr);
    props["trip_start"] = format_timestamp(trip.trip_start);
    props["trip_end"] = format_timestamp(trip.trip_end);
    props["sog_mean"] =
        sog_n ? ordered_json(sog_sum / static_cast<double>(sog_n)) : ordered_json(nullptr);

    ordered_json feature;
    feature["type"] = "Feature";
    feature["geometry"]["type"] = "LineString";
    feature["geometry"]["coordinates"] = std::move(coords);
    feature["properties"] = std::move(props);
    features.push_back(std::move(feature));
  }
  fc["features"] = std::move(features);
  return fc;
}

void write_geojson(const std::string& path, const std::vector<Trajectory>& trips,
                   const std::unordered_map<std::int64_t, std::string>& predicted) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FatalError("cannot write " + path);
  out << trips_to_geojson(trips, predicted).dump(2) << '\n';
  if (!out) throw FatalError("write failed: " + path);
}

}  // namespace ais
