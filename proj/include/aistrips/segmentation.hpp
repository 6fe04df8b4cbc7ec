#pragma once

#include <cstdint>
#include <vector>

#include "aistrips/records.hpp"

namespace ais {

// One MMSI's cleaned records, strictly time-ascending.
struct Track {
  std::int64_t mmsi = 0;
  std::vector<AisRecord> records;
};

// Inclusive index range into a track where the vessel dwelt within
// stop_radius_m of the run's first point for at least stop_min_duration_s.
struct StopInterval {
  std::size_t start_index = 0;
  std::size_t end_index = 0;
  std::int64_t duration_s = 0;
};

struct SegmentationParams {
  double stop_radius_m = 100.0;
  std::int64_t stop_min_duration_s = 3600;
  double min_trip_length_km = 0.2;
  std::size_t min_trip_points = 10;
};

struct Trajectory {
  std::int64_t trip_id = 0;  // 0 until assign_trip_ids
  std::int64_t mmsi = 0;
  std::vector<AisRecord> records;
  std::int64_t trip_start = 0;
  std::int64_t trip_end = 0;
};

// Sort cleaned records by (mmsi, timestamp) and cut into per-MMSI tracks.
// Exact (mmsi, timestamp) duplicates cannot occur post-clean, so timestamps
// are strictly increasing within a track.
std::vector<Track> group_tracks(std::vector<AisRecord> cleaned);

// Greedy single-pass scan: anchor a run at each candidate point, extend while
// points stay within stop_radius_m of the anchor, and emit the run if it
// spans stop_min_duration_s. Runs are disjoint and time-ordered. Nav status
// is deliberately ignored — moored vessels often still claim "under way".
std::vector<StopInterval> detect_stops(const Track& track,
                                       const SegmentationParams& params);

// Cut the track into trajectories at the stops (stop members are discarded)
// and additionally at time gaps > stop_min_duration_s, which mark absence
// from the area. Inside a stop-free span, a gap that long with displacement
// within the stop radius is impossible — detect_stops would have claimed it —
// so the time condition alone suffices. Degenerate one-record pieces are kept
// here (the output partitions the track) and die in filter_trips.
std::vector<Trajectory> segment(const Track& track,
                                const std::vector<StopInterval>& stops,
                                const SegmentationParams& params);

// Drop trips shorter than min_trip_length_km of sailed path or with fewer
// than min_trip_points records.
std::vector<Trajectory> filter_trips(std::vector<Trajectory> trips,
                                     const SegmentationParams& params);

// Deterministic dense ids: sort by (mmsi, trip_start, trip_end), number 1..N.
void assign_trip_ids(std::vector<Trajectory>& trips);

// detect + segment + filter over every track, then assign ids.
std::vector<Trajectory> segment_all(const std::vector<Track>& tracks,
                                    const SegmentationParams& params);

}  // namespace ais
