#include "aistrips/stage_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "aistrips/common.hpp"
#include "aistrips/csv.hpp"
#include "aistrips/timeutil.hpp"

namespace ais {

namespace {

constexpr std::string_view kVersion = "v1";

std::string opt_str(const std::optional<std::string>& v) {
  return v ? csv_escape(*v) : std::string();
}

std::string opt_num(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FatalError("cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FatalError("cannot read " + path);
  return in;
}

void write_joined(std::ofstream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

double parse_num(const std::string& s) {
  if (s.empty()) return std::nan("");
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw FatalError("bad numeric field '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw FatalError("bad integer field '" + s + "'");
  return v;
}

std::optional<std::string> opt_from(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

std::int64_t parse_ts(const std::string& s) {
  auto t = parse_timestamp(s);
  if (!t) throw FatalError("bad timestamp '" + s + "'");
  return *t;
}

}  // namespace

std::string record_csv_header() {
  std::string h;
  for (std::string_view name : column_names()) {
    if (!h.empty()) h += ',';
    h += name;
  }
  return h;
}

// One record as the canonical 26 fields, appended to `out`.
void record_csv_fields(const AisRecord& rec, std::vector<std::string>& out) {
  const StaticInfo& s = rec.statics;
  out.push_back(format_timestamp(rec.timestamp));
  out.push_back(std::string(to_string(rec.mobile_type)));
  out.push_back(std::to_string(rec.mmsi));
  out.push_back(format_double(rec.position.lat_deg));
  out.push_back(format_double(rec.position.lon_deg));
  out.push_back(std::string(to_string(rec.nav_status)));
  out.push_back(opt_num(rec.rot));
  out.push_back(opt_num(rec.sog_knots));
  out.push_back(opt_num(rec.cog_deg));
  out.push_back(opt_num(rec.heading_deg));
  out.push_back(opt_str(s.imo));
  out.push_back(opt_str(s.callsign));
  out.push_back(opt_str(s.name));
  out.push_back(opt_str(s.ship_type));
  out.push_back(opt_str(s.cargo_type));
  out.push_back(opt_num(s.width_m));
  out.push_back(opt_num(s.length_m));
  out.push_back(opt_str(s.pos_fix_device));
  out.push_back(opt_num(s.draught_m));
  out.push_back(opt_str(s.destination));
  out.push_back(opt_str(s.eta));
  out.push_back(opt_str(s.data_source));
  out.push_back(opt_num(s.a_m));
  out.push_back(opt_num(s.b_m));
  out.push_back(opt_num(s.c_m));
  out.push_back(opt_num(s.d_m));
}

std::string stage_header_line(std::string_view stage, std::uint64_t config_hash) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(config_hash));
  std::string line = "#aistrips ";
  line += stage;
  line += ' ';
  line += kVersion;
  line += " config=";
  line += hex;
  return line;
}

StageTag check_stage_line(const std::optional<std::string>& line,
                          std::string_view expected_stage) {
  if (!line)
    throw FatalError("missing stage header; expected '" + std::string(expected_stage) +
                     " " + std::string(kVersion) + "'");
  std::istringstream parts(*line);
  std::string magic, stage, version, config;
  parts >> magic >> stage >> version >> config;
  StageTag tag{stage, version, 0};
  if (config.rfind("config=", 0) == 0)
    tag.config_hash = std::strtoull(config.c_str() + 7, nullptr, 16);
  if (magic != "#aistrips" || stage != expected_stage || version != kVersion)
    throw FatalError("stage header mismatch: found '" + stage + " " + version +
                     "', expected '" + std::string(expected_stage) + " " +
                     std::string(kVersion) + "'");
  return tag;
}

void write_cleaned_csv(const std::string& path, const std::vector<AisRecord>& records,
                       std::uint64_t config_hash) {
  std::ofstream out = open_out(path);
  out << stage_header_line("cleaned", config_hash) << '\n';
  out << record_csv_header() << '\n';
  std::vector<std::string> fields;
  for (const AisRecord& rec : records) {
    fields.clear();
    record_csv_fields(rec, fields);
    write_joined(out, fields);
  }
  if (!out) throw FatalError("write failed: " + path);
}

std::vector<AisRecord> read_cleaned_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  AisCsvReader reader(in);
  check_stage_line(reader.stage_line(), "cleaned");
  std::vector<AisRecord> records;
  while (auto raw = reader.next()) {
    auto typed = typify(*raw);
    if (auto* err = std::get_if<RowError>(&typed))
      throw FatalError(path + ":" + std::to_string(err->line_no) +
                       ": corrupt cleaned row: " + err->reason);
    records.push_back(std::move(std::get<AisRecord>(typed)));
  }
  if (!reader.errors().empty())
    throw FatalError(path + ":" + std::to_string(reader.errors().front().line_no) +
                     ": corrupt cleaned row: " + reader.errors().front().reason);
  return records;
}

void write_trips_csv(const std::string& path, const std::vector<Trajectory>& trips,
                     std::uint64_t config_hash) {
  std::ofstream out = open_out(path);
  out << stage_header_line("trips", config_hash) << '\n';
  out << "trip_id," << record_csv_header() << '\n';
  std::vector<std::string> fields;
  for (const Trajectory& trip : trips) {
    for (const AisRecord& rec : trip.records) {
      fields.clear();
      fields.push_back(std::to_string(trip.trip_id));
      record_csv_fields(rec, fields);
      write_joined(out, fields);
    }
  }
  if (!out) throw FatalError("write failed: " + path);
}

std::vector<Trajectory> read_trips_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw FatalError(path + ": empty trips file");
  check_stage_line(line, "trips");
  if (!std::getline(in, line)) throw FatalError(path + ": missing trips header");
  const std::string expected = "trip_id," + record_csv_header();
  if (line != expected && line != expected + "\r")
    throw FatalError(path + ": unexpected trips column layout");

  std::vector<Trajectory> trips;
  std::vector<std::string> cells;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    split_csv_line(line, cells);
    if (cells.size() != kColumnCount + 1)
      throw FatalError(path + ":" + std::to_string(line_no) + ": bad field count");
    const std::int64_t trip_id = parse_int(cells[0]);
    RawRecord raw;
    raw.line_no = line_no;
    for (std::size_t i = 0; i < kColumnCount; ++i) raw.fields[i] = cells[i + 1];
    auto typed = typify(raw);
    if (auto* err = std::get_if<RowError>(&typed))
      throw FatalError(path + ":" + std::to_string(err->line_no) +
                       ": corrupt trip row: " + err->reason);
    AisRecord rec = std::move(std::get<AisRecord>(typed));
    if (trips.empty() || trips.back().trip_id != trip_id) {
      Trajectory t;
      t.trip_id = trip_id;
      t.mmsi = rec.mmsi;
      trips.push_back(std::move(t));
    }
    trips.back().records.push_back(std::move(rec));
  }
  for (Trajectory& t : trips) {
    t.trip_start = t.records.front().timestamp;
    t.trip_end = t.records.back().timestamp;
  }
  return trips;
}

const std::vector<std::string>& feature_csv_columns() {
  static const std::vector<std::string> cols = {
      "mmsi",          "trip_id",        "trip_start",
      "trip_end",      "ship_type",      "cargo_type",
      "callsign",      "name",           "destination",
      "trip_duration_s", "n_positions",  "trajectory_length_km",
      "endpoint_distance_km", "directness_ratio", "min_lat",
      "max_lat",       "min_lon",        "max_lon",
      "lat_span",      "lon_span",       "sog_min",
      "sog_max",       "sog_mean",       "sog_median",
      "sog_std",       "cog_min",        "cog_max",
      "cog_mean",      "cog_median",     "cog_std",
      "init_cos",      "init_sin",       "naive_perimeter",
      "naive_area",    "aspect_ratio",   "shape_complexity",
      "bridge_position_ratio", "type_of_mobile", "total_km2",
  };
  return cols;
}

void write_features_csv(const std::string& path, const std::vector<FeatureRow>& rows,
                        std::uint64_t config_hash) {
  std::ofstream out = open_out(path);
  out << stage_header_line("features", config_hash) << '\n';
  const auto& cols = feature_csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  std::vector<std::string> f;
  for (const FeatureRow& r : rows) {
    f.clear();
    f.push_back(std::to_string(r.mmsi));
    f.push_back(std::to_string(r.trip_id));
    f.push_back(format_timestamp(r.trip_start));
    f.push_back(format_timestamp(r.trip_end));
    f.push_back(opt_str(r.ship_type));
    f.push_back(opt_str(r.cargo_type));
    f.push_back(opt_str(r.callsign));
    f.push_back(opt_str(r.name));
    f.push_back(opt_str(r.destination));
    f.push_back(format_double(r.geo.trip_duration_s));
    f.push_back(format_double(r.geo.n_positions));
    f.push_back(format_double(r.geo.trajectory_length_km));
    f.push_back(format_double(r.geo.endpoint_distance_km));
    f.push_back(format_double(r.geo.directness_ratio));
    f.push_back(format_double(r.geo.min_lat));
    f.push_back(format_double(r.geo.max_lat));
    f.push_back(format_double(r.geo.min_lon));
    f.push_back(format_double(r.geo.max_lon));
    f.push_back(format_double(r.geo.lat_span));
    f.push_back(format_double(r.geo.lon_span));
    f.push_back(format_double(r.kin.sog_min));
    f.push_back(format_double(r.kin.sog_max));
    f.push_back(format_double(r.kin.sog_mean));
    f.push_back(format_double(r.kin.sog_median));
    f.push_back(format_double(r.kin.sog_std));
    f.push_back(format_double(r.kin.cog_min));
    f.push_back(format_double(r.kin.cog_max));
    f.push_back(format_double(r.kin.cog_mean));
    f.push_back(format_double(r.kin.cog_median));
    f.push_back(format_double(r.kin.cog_std));
    f.push_back(format_double(r.kin.init_cos));
    f.push_back(format_double(r.kin.init_sin));
    f.push_back(format_double(r.shape.naive_perimeter_m));
    f.push_back(format_double(r.shape.naive_area_m2));
    f.push_back(format_double(r.shape.aspect_ratio));
    f.push_back(format_double(r.shape.shape_complexity));
    f.push_back(format_double(r.shape.bridge_position_ratio));
    f.push_back(std::string(to_string(r.mobile_type)));
    f.push_back(format_double(r.geo.total_km2));
    write_joined(out, f);
  }
  if (!out) throw FatalError("write failed: " + path);
}

std::vector<FeatureRow> read_features_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw FatalError(path + ": empty features file");
  check_stage_line(line, "features");
  if (!std::getline(in, line)) throw FatalError(path + ": missing features header");
  {
    std::vector<std::string> names;
    split_csv_line(line, names);
    if (names != feature_csv_columns())
      throw FatalError(path + ": unexpected features column layout");
  }

  std::vector<FeatureRow> rows;
  std::vector<std::string> c;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    split_csv_line(line, c);
    if (c.size() != feature_csv_columns().size())
      throw FatalError(path + ":" + std::to_string(line_no) + ": bad field count");
    FeatureRow r;
    std::size_t i = 0;
    r.mmsi = parse_int(c[i++]);
    r.trip_id = parse_int(c[i++]);
    r.trip_start = parse_ts(c[i++]);
    r.trip_end = parse_ts(c[i++]);
    r.ship_type = opt_from(c[i++]);
    r.cargo_type = opt_from(c[i++]);
    r.callsign = opt_from(c[i++]);
    r.name = opt_from(c[i++]);
    r.destination = opt_from(c[i++]);
    r.geo.trip_duration_s = parse_num(c[i++]);
    r.geo.n_positions = parse_num(c[i++]);
    r.geo.trajectory_length_km = parse_num(c[i++]);
    r.geo.endpoint_distance_km = parse_num(c[i++]);
    r.geo.directness_ratio = parse_num(c[i++]);
    r.geo.min_lat = parse_num(c[i++]);
    r.geo.max_lat = parse_num(c[i++]);
    r.geo.min_lon = parse_num(c[i++]);
    r.geo.max_lon = parse_num(c[i++]);
    r.geo.lat_span = parse_num(c[i++]);
    r.geo.lon_span = parse_num(c[i++]);
    r.kin.sog_min = parse_num(c[i++]);
    r.kin.sog_max = parse_num(c[i++]);
    r.kin.sog_mean = parse_num(c[i++]);
    r.kin.sog_median = parse_num(c[i++]);
    r.kin.sog_std = parse_num(c[i++]);
    r.kin.cog_min = parse_num(c[i++]);
    r.kin.cog_max = parse_num(c[i++]);
    r.kin.cog_mean = parse_num(c[i++]);
    r.kin.cog_median = parse_num(c[i++]);
    r.kin.cog_std = parse_num(c[i++]);
    r.kin.init_cos = parse_num(c[i++]);
    r.kin.init_sin = parse_num(c[i++]);
    r.shape.naive_perimeter_m = parse_num(c[i++]);
    r.shape.naive_area_m2 = parse_num(c[i++]);
    r.shape.aspect_ratio = parse_num(c[i++]);
    r.shape.shape_complexity = parse_num(c[i++]);
    r.shape.bridge_position_ratio = parse_num(c[i++]);
    r.mobile_type = mobile_type_from_string(c[i++]);
    r.geo.total_km2 = parse_num(c[i++]);
    // L and W are not columns of the table; recover them from the derived
    // pair for completeness (nothing downstream consumes them).
    const double half_perim = r.shape.naive_perimeter_m / 2.0;
    r.shape.length_m = half_perim / (1.0 + r.shape.aspect_ratio);
    r.shape.width_m = half_perim - r.shape.length_m;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace ais
