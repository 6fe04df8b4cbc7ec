#include "synthetic_fleet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "aistrips/rng.hpp"
#include "aistrips/timeutil.hpp"

namespace fleet {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kKmPerDeg = 111.19492664455873;  // 6371 * pi / 180
constexpr std::int64_t kStepS = 180;

struct Box {
  double lat_lo, lat_hi, lon_lo, lon_hi;
};

struct Profile {
  const char* ship_type;   // "" = vessel reports nothing usable
  const char* cargo_type;
  const char* mobile;
  const char* nav_status;
  const char* dest_a;
  const char* dest_b;
  double sog_lo, sog_hi;
  double dim_a_lo, dim_a_hi;  // antenna to bow
  double dim_b_lo, dim_b_hi;  // antenna to stern
  double dim_c_lo, dim_c_hi;  // port = starboard band
  double draught_lo, draught_hi;
  bool random_walk;  // fishing wanders; everyone else runs a lane
  Box box;
  double lane_a_lat, lane_a_lon, lane_b_lat, lane_b_lon;
};

// Both operating areas sit well inside the study-area ring (verified against
// the winding oracle on a dense grid), so no synthetic report is ever lost to
// the AOI filter.
const Box kSouth{54.45, 54.75, 14.0, 15.3};
const Box kNorth{55.35, 55.75, 14.6, 15.8};

const Profile kCargo{"Cargo",     "Category X", "Class A", "Under way using engine",
                     "PORT EAST", "PORT WEST",  10.5, 14.0, 150, 180, 30, 45,
                     14,          16,           9.0,  12.0, false, kSouth,
                     54.50,       14.05,        54.53, 15.25};
const Profile kTanker{"Tanker",    "No additional information", "Class A",
                      "Under way using engine", "TERMINAL N", "TERMINAL S",
                      6.5,         9.0,  200, 230, 40, 55, 20, 22, 13.0, 16.0,
                      false,       kSouth, 54.66, 14.05, 54.69, 15.25};
const Profile kPassenger{"Passenger", "No additional information", "Class A",
                         "Under way using engine", "FERRY A", "FERRY B",
                         15.0,        18.0, 70, 85, 20, 28, 10, 12, 5.0, 6.5,
                         false,       kNorth, 55.40, 14.68, 55.62, 15.45};
const Profile kHsc{"HSC",   "No additional information", "Class B",
                   "Under way using engine", "FAST A", "FAST B",
                   31.0,    37.0, 28, 35, 7, 10, 5, 6, 2.0, 3.0,
                   false,   kNorth, 55.44, 14.72, 55.70, 15.60};
const Profile kFishing{"Fishing", "No additional information", "Class A",
                       "Engaged in fishing", "GROUNDS", "GROUNDS",
                       3.5,       5.5, 12, 18, 5, 8, 3, 4, 3.0, 4.0,
                       true,      kNorth, 0, 0, 0, 0};

std::string fmt(double v, int decimals) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// dd/mm/yyyy HH:MM:SS — the dump format.
std::string dump_timestamp(std::int64_t unix_s) {
  std::int64_t days = unix_s / 86400;
  std::int64_t rem = unix_s % 86400;
  std::int64_t y;
  unsigned m, d;
  ais::civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02u/%02u/%lld %02lld:%02lld:%02lld", d, m,
                static_cast<long long>(y), static_cast<long long>(rem / 3600),
                static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

struct VesselState {
  std::int64_t mmsi = 0;
  const Profile* prof = nullptr;
  std::string type_override;  // what the ship-type field carries (may be "")
  double lane_offset = 0.0;   // per-vessel lat shift of the lane
  double sog_bias = 0.0;
  double dim_a = 0, dim_b = 0, dim_c = 0, dim_d = 0, draught = 0;
  std::string name, callsign, imo;
  double lat = 0, lon = 0, sog = 0, bearing = 0;
  bool toward_b = true;
  int record_no = 0;  // drives the sparse static-field emission
};

struct Emitter {
  std::vector<std::pair<std::int64_t, std::string>> rows;
  std::string first_kept_line;  // template for the duplicate junk row

  void emit(VesselState& v, std::int64_t ts, const std::string& nav,
            const std::string& cog, const std::string& heading) {
    // Statics arrive sporadically, the way real class-A transponders send
    // them: type every 4th report, dimensions every 3rd.
    const bool send_type = v.record_no % 4 == 0;
    const bool send_dims = v.record_no % 3 == 0;
    ++v.record_no;

    std::string line;
    line.reserve(220);
    line += dump_timestamp(ts);
    line += ',';
    line += v.prof->mobile;
    line += ',';
    line += std::to_string(v.mmsi);
    line += ',';
    line += fmt(v.lat, 6);
    line += ',';
    line += fmt(v.lon, 6);
    line += ',';
    line += nav;
    line += ",0.0,";  // ROT
    line += fmt(v.sog, 1);
    line += ',';
    line += cog;
    line += ',';
    line += heading;
    line += ',';
    line += v.imo;
    line += ',';
    line += v.callsign;
    line += ',';
    line += v.name;
    line += ',';
    if (send_type) line += v.type_override;
    line += ',';
    if (send_type) line += v.prof->cargo_type;
    line += ',';
    if (send_dims) line += fmt(v.dim_c + v.dim_d, 0);
    line += ',';
    if (send_dims) line += fmt(v.dim_a + v.dim_b, 0);
    line += ",GPS,";
    line += fmt(v.draught, 1);
    line += ',';
    line += v.toward_b ? v.prof->dest_b : v.prof->dest_a;
    line += ",,AIS,";
    if (send_dims) {
      line += fmt(v.dim_a, 0);
      line += ',';
      line += fmt(v.dim_b, 0);
      line += ',';
      line += fmt(v.dim_c, 0);
      line += ',';
      line += fmt(v.dim_d, 0);
    } else {
      line += ",,,";
    }
    if (first_kept_line.empty()) first_kept_line = line;
    rows.emplace_back(ts, std::move(line));
  }
};

double norm_deg(double d) {
  d = std::fmod(d, 360.0);
  return d < 0 ? d + 360.0 : d;
}

void step_position(VesselState& v) {
  const double d_km = v.sog * 1.852 * kStepS / 3600.0;
  const double br = v.bearing * kPi / 180.0;
  v.lat += d_km * std::cos(br) / kKmPerDeg;
  v.lon += d_km * std::sin(br) / (kKmPerDeg * std::cos(v.lat * kPi / 180.0));
}

double bearing_to(double lat, double lon, double tlat, double tlon) {
  const double dy = (tlat - lat) * kKmPerDeg;
  const double dx = (tlon - lon) * kKmPerDeg * std::cos(lat * kPi / 180.0);
  return norm_deg(std::atan2(dx, dy) * 180.0 / kPi);
}

double dist_km(double lat, double lon, double tlat, double tlon) {
  const double dy = (tlat - lat) * kKmPerDeg;
  const double dx = (tlon - lon) * kKmPerDeg * std::cos(lat * kPi / 180.0);
  return std::hypot(dx, dy);
}

// One trip's worth of position reports; the vessel ends where it stops.
std::int64_t run_trip(VesselState& v, std::int64_t t, ais::Rng& rng, Emitter& out) {
  const Profile& p = *v.prof;
  int steps;
  double tlat = 0, tlon = 0;
  if (p.random_walk) {
    steps = 50 + static_cast<int>(rng.below(40));
    v.bearing = 360.0 * rng.uniform();
  } else {
    tlat = (v.toward_b ? p.lane_b_lat : p.lane_a_lat) + v.lane_offset;
    tlon = v.toward_b ? p.lane_b_lon : p.lane_a_lon;
    steps = 400;  // distance-terminated; the cap is a safety net
  }
  v.sog = std::clamp(p.sog_lo + (p.sog_hi - p.sog_lo) * rng.uniform() + v.sog_bias,
                     p.sog_lo, p.sog_hi);

  for (int s = 0; s < steps; ++s) {
    if (p.random_walk) {
      v.bearing = norm_deg(v.bearing + (rng.uniform() * 2.0 - 1.0) * 70.0);
      // reflect off the operating-box walls
      for (int tries = 0; tries < 4; ++tries) {
        VesselState probe = v;
        step_position(probe);
        const Box& b = p.box;
        if (probe.lat < b.lat_lo || probe.lat > b.lat_hi)
          v.bearing = norm_deg(180.0 - v.bearing);
        else if (probe.lon < b.lon_lo || probe.lon > b.lon_hi)
          v.bearing = norm_deg(360.0 - v.bearing);
        else
          break;
      }
    } else {
      if (dist_km(v.lat, v.lon, tlat, tlon) < 1.5) break;
      v.bearing =
          norm_deg(bearing_to(v.lat, v.lon, tlat, tlon) + (rng.uniform() * 2.0 - 1.0) * 4.0);
    }
    v.sog = std::clamp(v.sog + (rng.uniform() * 2.0 - 1.0) * 0.4, p.sog_lo, p.sog_hi);
    step_position(v);
    const double cog = norm_deg(v.bearing + (rng.uniform() * 2.0 - 1.0) * 2.0);
    const double heading = norm_deg(cog + (rng.uniform() * 2.0 - 1.0) * 2.0);
    out.emit(v, t, p.nav_status, fmt(cog, 1), fmt(heading, 0));
    t += kStepS;
  }
  if (!p.random_walk) v.toward_b = !v.toward_b;
  return t;
}

// Harbor dwell: >= 80 minutes of reports jittering within ~20 m of the
// anchor, speed over ground small but never zero (engines idling against the
// quay), status still claiming "under way" — the classic moored-but-lying
// pattern stop detection exists for.
std::int64_t run_dwell(VesselState& v, std::int64_t t, ais::Rng& rng, Emitter& out) {
  const double anchor_lat = v.lat, anchor_lon = v.lon;
  const int points = 20 + static_cast<int>(rng.below(8));
  for (int i = 0; i < points; ++i) {
    const double r_m = 20.0 * rng.uniform();
    const double theta = 2.0 * kPi * rng.uniform();
    v.lat = anchor_lat + r_m * std::cos(theta) / (kKmPerDeg * 1000.0);
    v.lon = anchor_lon + r_m * std::sin(theta) /
                             (kKmPerDeg * 1000.0 * std::cos(anchor_lat * kPi / 180.0));
    v.sog = 0.1 + 0.4 * rng.uniform();
    out.emit(v, t, "Under way using engine", fmt(360.0 * rng.uniform(), 1),
             fmt(360.0 * rng.uniform(), 0));
    t += 240;
  }
  v.lat = anchor_lat;
  v.lon = anchor_lon;
  return t;
}

int vessels_for(const Profile& prof, const char* type_label, int trips_wanted,
                std::int64_t mmsi_base, std::int64_t t_base, std::uint64_t seed,
                std::uint64_t& vessel_counter, Emitter& out) {
  int planned = 0;
  int vessel_idx = 0;
  while (planned < trips_wanted) {
    ais::Rng rng(ais::derive_seed(seed, "vessel", vessel_counter++));
    VesselState v;
    v.mmsi = mmsi_base + vessel_idx;
    v.prof = &prof;
    v.type_override = type_label;
    v.lane_offset = (rng.uniform() * 2.0 - 1.0) * 0.02;
    v.sog_bias = (rng.uniform() * 2.0 - 1.0) * 0.5;
    v.dim_a = prof.dim_a_lo + (prof.dim_a_hi - prof.dim_a_lo) * rng.uniform();
    v.dim_b = prof.dim_b_lo + (prof.dim_b_hi - prof.dim_b_lo) * rng.uniform();
    v.dim_c = prof.dim_c_lo + (prof.dim_c_hi - prof.dim_c_lo) * rng.uniform();
    v.dim_d = v.dim_c + rng.uniform();  // near-symmetric beam
    v.draught = prof.draught_lo + (prof.draught_hi - prof.draught_lo) * rng.uniform();
    v.name = std::string("SYN ") + prof.dest_a + " " + std::to_string(vessel_idx);
    v.callsign = "OX" + std::to_string(v.mmsi % 100000);
    v.imo = std::to_string(9000000 + v.mmsi % 1000000);

    if (prof.random_walk) {
      const Box& b = prof.box;
      v.lat = b.lat_lo + (0.2 + 0.6 * rng.uniform()) * (b.lat_hi - b.lat_lo);
      v.lon = b.lon_lo + (0.2 + 0.6 * rng.uniform()) * (b.lon_hi - b.lon_lo);
    } else {
      v.toward_b = true;
      v.lat = prof.lane_a_lat + v.lane_offset + (rng.uniform() * 2.0 - 1.0) * 0.01;
      v.lon = prof.lane_a_lon + (rng.uniform() * 2.0 - 1.0) * 0.01;
    }

    int trips = 1 + static_cast<int>(rng.below(3));
    trips = std::min(trips, trips_wanted - planned);
    std::int64_t t = t_base + static_cast<std::int64_t>(rng.below(5 * 86400));
    for (int k = 0; k < trips; ++k) {
      t = run_trip(v, t, rng, out);
      ++planned;
      if (k + 1 < trips) {
        if (k % 2 == 0) {
          t = run_dwell(v, t, rng, out);  // visible harbor call
        } else {
          // vessel leaves coverage; nothing but silence, well past the
          // stop threshold
          t += 5400 + static_cast<std::int64_t>(rng.below(10800));
        }
      }
    }
    ++vessel_idx;
  }
  return vessel_idx;
}

std::string junk_line(std::int64_t ts, std::int64_t mmsi, const char* mobile,
                      double lat, double lon, const char* nav, double sog) {
  std::string line;
  line += dump_timestamp(ts);
  line += ',';
  line += mobile;
  line += ',';
  line += std::to_string(mmsi);
  line += ',';
  line += fmt(lat, 6);
  line += ',';
  line += fmt(lon, 6);
  line += ',';
  line += nav;
  line += ",0.0,";
  line += fmt(sog, 1);
  line += ",90.0,90,,,JUNK,,,,,GPS,,,,AIS,,,,";
  return line;
}

}  // namespace

Fleet generate(const FleetOptions& opt) {
  Emitter out;
  const std::int64_t t_base = ais::days_from_civil(2025, 1, 23) * 86400;
  std::uint64_t vessel_counter = 0;

  Fleet fleet;
  fleet.planned_trips += opt.cargo_trips;
  vessels_for(kCargo, "Cargo", opt.cargo_trips, 219000000, t_base, opt.seed,
              vessel_counter, out);
  fleet.planned_trips += opt.tanker_trips;
  vessels_for(kTanker, "Tanker", opt.tanker_trips, 220000000, t_base, opt.seed,
              vessel_counter, out);
  fleet.planned_trips += opt.passenger_trips;
  vessels_for(kPassenger, "Passenger", opt.passenger_trips, 221000000, t_base,
              opt.seed, vessel_counter, out);
  fleet.planned_trips += opt.fishing_trips;
  vessels_for(kFishing, "Fishing", opt.fishing_trips, 222000000, t_base, opt.seed,
              vessel_counter, out);
  fleet.planned_trips += opt.hsc_trips;
  vessels_for(kHsc, "HSC", opt.hsc_trips, 223000000, t_base, opt.seed,
              vessel_counter, out);

  if (opt.untyped_trips > 0) {
    // Cargo-profile vessels whose type field is empty or one of the literal
    // "no answer" strings real transponders send.
    const char* labels[] = {"Undefined", "", "Unknown"};
    int remaining = opt.untyped_trips;
    int group = 0;
    std::int64_t next_mmsi = 229000000;
    while (remaining > 0) {
      const int take = std::min(remaining, 2);
      const int vessels = vessels_for(kCargo, labels[group % 3], take, next_mmsi,
                                      t_base, opt.seed, vessel_counter, out);
      for (int i = 0; i < vessels; ++i) fleet.untyped_mmsi.push_back(next_mmsi + i);
      next_mmsi += vessels;
      fleet.planned_trips += take;
      fleet.planned_untyped += take;
      remaining -= take;
      ++group;
    }
  }

  if (opt.junk) {
    const std::int64_t jt = t_base + 2 * 86400 + 43200;
    auto add = [&](std::string line) { out.rows.emplace_back(jt, std::move(line)); };
    // one row per cleaning rule, each passing every rule before its own
    add(junk_line(jt + 0, 230000001, "Class A", 52.0, 10.0,
                  "Under way using engine", 5.0));  // outside the coarse box
    add(junk_line(jt + 1, 230000001, "Class A", 56.5, 12.0,
                  "Under way using engine", 5.0));  // inside box, outside ring
    add(junk_line(jt + 2, 230000001, "Base Station", 54.6, 14.5,
                  "Under way using engine", 5.0));
    add(junk_line(jt + 3, 230000001, "Class A", 54.6, 14.5, "Moored", 5.0));
    add(junk_line(jt + 4, 230000001, "Class A", 54.6, 14.5, "At anchor", 5.0));
    add(junk_line(jt + 5, 230000001, "Class A", 54.6, 14.5,
                  "Constrained by her draught", 5.0));
    add(junk_line(jt + 6, 230000001, "Class A", 54.6, 14.5,
                  "Under way using engine", 95.0));  // impossible speed
    add(junk_line(jt + 7, 230000001, "Class A", 54.6, 14.5,
                  "Under way using engine", 0.0));
    out.rows.emplace_back(jt + 8, out.first_kept_line);   // exact resend
    add(dump_timestamp(jt) + ",junk,row");                // wrong arity
    add(junk_line(jt + 9, 230000001, "Class A", 95.5, 14.5,
                  "Under way using engine", 5.0));  // latitude off the planet
    fleet.junk = JunkTally{2, 1, 1, 1, 1, 3, 1, 1};
  }

  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  fleet.lines.reserve(out.rows.size());
  for (auto& [ts, line] : out.rows) fleet.lines.push_back(std::move(line));
  if (!out.rows.empty()) {
    fleet.first_ts = out.rows.front().first;
    fleet.last_ts = out.rows.back().first;
  }
  return fleet;
}

const std::string& raw_header() {
  static const std::string header =
      "# Timestamp,Type of mobile,MMSI,Latitude,Longitude,Navigational status,"
      "ROT,SOG,COG,Heading,IMO,Callsign,Name,Ship type,Cargo type,Width,Length,"
      "Type of position fixing device,Draught,Destination,ETA,Data source type,"
      "A,B,C,D";
  return header;
}

void write_raw_csv(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << raw_header() << '\n';
  for (const std::string& line : lines) out << line << '\n';
}

std::vector<std::vector<std::string>> split_by_day(
    const std::vector<std::string>& lines) {
  std::vector<std::vector<std::string>> days;
  std::string current_day;
  for (const std::string& line : lines) {
    // dd/mm/yyyy — the first ten characters of every row
    std::string day = line.substr(0, 10);
    if (days.empty() || day != current_day) {
      days.emplace_back();
      current_day = day;
    }
    days.back().push_back(line);
  }
  return days;
}

}  // namespace fleet
