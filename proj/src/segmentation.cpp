#include "aistrips/segmentation.hpp"

#include <algorithm>

#include "aistrips/geo.hpp"

namespace ais {

std::vector<Track> group_tracks(std::vector<AisRecord> cleaned) {
  std::sort(cleaned.begin(), cleaned.end(), [](const AisRecord& a, const AisRecord& b) {
    if (a.mmsi != b.mmsi) return a.mmsi < b.mmsi;
    return a.timestamp < b.timestamp;
  });
  std::vector<Track> tracks;
  for (AisRecord& r : cleaned) {
    if (tracks.empty() || tracks.back().mmsi != r.mmsi) {
      tracks.push_back(Track{r.mmsi, {}});
    }
    tracks.back().records.push_back(std::move(r));
  }
  return tracks;
}

std::vector<StopInterval> detect_stops(const Track& track,
                                       const SegmentationParams& params) {
  const auto& recs = track.records;
  std::vector<StopInterval> stops;
  const double radius_km = params.stop_radius_m / 1000.0;

  std::size_t i = 0;
  while (i < recs.size()) {
    const geo::GeoPoint anchor = recs[i].position;
    std::size_t j = i;
    while (j + 1 < recs.size() &&
           geo::haversine_km(anchor, recs[j + 1].position) <= radius_km) {
      ++j;
    }
    const std::int64_t span = recs[j].timestamp - recs[i].timestamp;
    if (span >= params.stop_min_duration_s) {
      stops.push_back({i, j, span});
      i = j + 1;
    } else {
      ++i;
    }
  }
  return stops;
}

namespace {

Trajectory make_trip(const Track& track, std::size_t begin, std::size_t end) {
  Trajectory t;
  t.mmsi = track.mmsi;
  t.records.assign(track.records.begin() + static_cast<std::ptrdiff_t>(begin),
                   track.records.begin() + static_cast<std::ptrdiff_t>(end));
  t.trip_start = t.records.front().timestamp;
  t.trip_end = t.records.back().timestamp;
  return t;
}

}  // namespace

std::vector<Trajectory> segment(const Track& track,
                                const std::vector<StopInterval>& stops,
                                const SegmentationParams& params) {
  const auto& recs = track.records;
  std::vector<Trajectory> trips;

  // Walk the stop-free spans between consecutive stops.
  std::size_t span_begin = 0;
  auto emit_span = [&](std::size_t begin, std::size_t end) {  // half-open
    std::size_t piece_begin = begin;
    for (std::size_t k = begin + 1; k < end; ++k) {
      if (recs[k].timestamp - recs[k - 1].timestamp > params.stop_min_duration_s) {
        trips.push_back(make_trip(track, piece_begin, k));
        piece_begin = k;
      }
    }
    if (piece_begin < end) trips.push_back(make_trip(track, piece_begin, end));
  };

  for (const StopInterval& s : stops) {
    if (span_begin < s.start_index) emit_span(span_begin, s.start_index);
    span_begin = s.end_index + 1;
  }
  if (span_begin < recs.size()) emit_span(span_begin, recs.size());
  return trips;
}

std::vector<Trajectory> filter_trips(std::vector<Trajectory> trips,
                                     const SegmentationParams& params) {
  std::vector<Trajectory> kept;
  kept.reserve(trips.size());
  for (Trajectory& t : trips) {
    if (t.records.size() < params.min_trip_points) continue;
    std::vector<geo::GeoPoint> pts;
    pts.reserve(t.records.size());
    for (const AisRecord& r : t.records) pts.push_back(r.position);
    if (geo::path_length_km(pts) < params.min_trip_length_km) continue;
    kept.push_back(std::move(t));
  }
  return kept;
}

void assign_trip_ids(std::vector<Trajectory>& trips) {
  std::sort(trips.begin(), trips.end(), [](const Trajectory& a, const Trajectory& b) {
    if (a.mmsi != b.mmsi) return a.mmsi < b.mmsi;
    if (a.trip_start != b.trip_start) return a.trip_start < b.trip_start;
    return a.trip_end < b.trip_end;
  });
  std::int64_t next_id = 1;
  for (Trajectory& t : trips) t.trip_id = next_id++;
}

std::vector<Trajectory> segment_all(const std::vector<Track>& tracks,
                                    const SegmentationParams& params) {
  std::vector<Trajectory> all;
  for (const Track& track : tracks) {
    auto stops = detect_stops(track, params);
    auto trips = segment(track, stops, params);
    for (Trajectory& t : trips) all.push_back(std::move(t));
  }
  all = filter_trips(std::move(all), params);
  assign_trip_ids(all);
  return all;
}

}  // namespace ais
