#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "aistrips/segmentation.hpp"

namespace ais {

// FeatureCollection of one LineString per trip. ship_type_true comes from the
// trip's (filled) static fields, ship_type_pred from `predicted` keyed by
// trip_id (null when absent), sog_mean from the trip's SOG reports.
nlohmann::ordered_json trips_to_geojson(
    const std::vector<Trajectory>& trips,
    const std::unordered_map<std::int64_t, std::string>& predicted = {});

void write_geojson(const std::string& path, const std::vector<Trajectory>& trips,
                   const std::unordered_map<std::int64_t, std::string>& predicted = {});

}  // namespace ais
