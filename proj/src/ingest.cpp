#include "aistrips/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "aistrips/common.hpp"
#include "aistrips/csv.hpp"
#include "aistrips/timeutil.hpp"

namespace ais {

const std::array<std::string_view, kColumnCount>& column_names() {
  static const std::array<std::string_view, kColumnCount> names = {
      "Timestamp",     "Type of mobile", "MMSI",        "Latitude",
      "Longitude",     "Navigational status", "ROT",    "SOG",
      "COG",           "Heading",        "IMO",         "Callsign",
      "Name",          "Ship type",      "Cargo type",  "Width",
      "Length",        "Type of position fixing device", "Draught",
      "Destination",   "ETA",            "Data source type", "A",
      "B",             "C",              "D",
  };
  return names;
}

namespace {

std::string normalize_header(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '#') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  // trim
  auto b = out.find_first_not_of(" \t\r");
  auto e = out.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  out = out.substr(b, e - b + 1);
  // spaces -> underscores so "Ship type" and "ship_type" both match
  std::replace(out.begin(), out.end(), ' ', '_');
  return out;
}

int slot_for_name(const std::string& norm) {
  // DMA names and our canonical snake_case aliases.
  static const std::pair<std::string_view, Column> table[] = {
      {"timestamp", Column::Timestamp},
      {"type_of_mobile", Column::MobileType},
      {"mobile_type", Column::MobileType},
      {"mmsi", Column::Mmsi},
      {"latitude", Column::Latitude},
      {"longitude", Column::Longitude},
      {"navigational_status", Column::NavStatus},
      {"nav_status", Column::NavStatus},
      {"rot", Column::Rot},
      {"sog", Column::Sog},
      {"cog", Column::Cog},
      {"heading", Column::Heading},
      {"imo", Column::Imo},
      {"callsign", Column::Callsign},
      {"name", Column::Name},
      {"ship_type", Column::ShipType},
      {"cargo_type", Column::CargoType},
      {"width", Column::Width},
      {"length", Column::Length},
      {"type_of_position_fixing_device", Column::PosFixDevice},
      {"pos_fix_device", Column::PosFixDevice},
      {"draught", Column::Draught},
      {"destination", Column::Destination},
      {"eta", Column::Eta},
      {"data_source_type", Column::DataSource},
      {"data_source", Column::DataSource},
      {"a", Column::DimA},
      {"b", Column::DimB},
      {"c", Column::DimC},
      {"d", Column::DimD},
  };
  for (const auto& [name, col] : table)
    if (norm == name) return static_cast<int>(col);
  return -1;
}

bool read_line(std::istream& in, std::string& line) {
  return static_cast<bool>(std::getline(in, line));
}

}  // namespace

AisCsvReader::AisCsvReader(std::istream& in) : in_(in) {
  std::string line;
  if (!read_line(in_, line)) throw FatalError("empty input: no header row");
  ++line_no_;
  if (line.rfind("#aistrips", 0) == 0) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    stage_line_ = line;
    if (!read_line(in_, line)) throw FatalError("missing header row after stage line");
    ++line_no_;
  }
  split_csv_line(line, scratch_);
  header_cols_ = scratch_.size();
  slot_for_input_col_.resize(header_cols_, -1);
  std::array<bool, kColumnCount>& have = present_;
  for (std::size_t i = 0; i < header_cols_; ++i) {
    int slot = slot_for_name(normalize_header(scratch_[i]));
    slot_for_input_col_[i] = slot;
    if (slot >= 0) have[static_cast<std::size_t>(slot)] = true;
  }
  for (Column req : {Column::Timestamp, Column::Mmsi, Column::Latitude, Column::Longitude}) {
    if (!have[static_cast<std::size_t>(static_cast<int>(req))])
      throw FatalError("header missing required column: " +
                       std::string(column_names()[static_cast<int>(req)]));
  }
}

std::optional<RawRecord> AisCsvReader::next() {
  std::string line;
  while (read_line(in_, line)) {
    ++line_no_;
    if (line.empty() || line == "\r") continue;
    ++rows_seen_;
    split_csv_line(line, scratch_);
    if (scratch_.size() != header_cols_) {
      errors_.push_back({line_no_, "field count " + std::to_string(scratch_.size()) +
                                       " does not match header count " +
                                       std::to_string(header_cols_)});
      continue;
    }
    RawRecord rec;
    rec.line_no = line_no_;
    for (std::size_t i = 0; i < header_cols_; ++i) {
      int slot = slot_for_input_col_[i];
      if (slot >= 0) rec.fields[static_cast<std::size_t>(slot)] = std::move(scratch_[i]);
    }
    return rec;
  }
  return std::nullopt;
}

namespace {

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
  double v = 0;
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::int64_t> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
  std::int64_t v = 0;
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e) return std::nullopt;
  return v;
}

std::optional<std::string> opt_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

// Course in [0, 360) or missing; 360 wraps to 0, anything else out of range
// is treated as noise.
std::optional<double> sanitize_course(std::optional<double> v) {
  if (!v) return std::nullopt;
  if (*v < 0.0 || *v > 360.0) return std::nullopt;
  return std::fmod(*v, 360.0);
}

std::optional<double> nonnegative(std::optional<double> v) {
  if (v && *v < 0.0) return std::nullopt;
  return v;
}

}  // namespace

std::variant<AisRecord, RowError> typify(const RawRecord& raw) {
  auto fail = [&](std::string why) {
    return RowError{raw.line_no, std::move(why)};
  };

  auto ts = parse_timestamp(raw.at(Column::Timestamp));
  if (!ts) return fail("unparseable timestamp '" + raw.at(Column::Timestamp) + "'");
  if (*ts <= 0) return fail("non-positive timestamp");

  auto mmsi = parse_int(raw.at(Column::Mmsi));
  if (!mmsi || *mmsi <= 0) return fail("unparseable MMSI '" + raw.at(Column::Mmsi) + "'");

  auto lat = parse_double(raw.at(Column::Latitude));
  auto lon = parse_double(raw.at(Column::Longitude));
  if (!lat || *lat < -90.0 || *lat > 90.0)
    return fail("latitude out of range '" + raw.at(Column::Latitude) + "'");
  if (!lon || *lon < -180.0 || *lon > 180.0)
    return fail("longitude out of range '" + raw.at(Column::Longitude) + "'");

  AisRecord rec;
  rec.timestamp = *ts;
  rec.mmsi = *mmsi;
  rec.position = {*lat, *lon};
  rec.nav_status = nav_status_from_string(raw.at(Column::NavStatus));
  rec.mobile_type = mobile_type_from_string(raw.at(Column::MobileType));
  rec.sog_knots = nonnegative(parse_double(raw.at(Column::Sog)));
  rec.cog_deg = sanitize_course(parse_double(raw.at(Column::Cog)));
  auto heading = parse_double(raw.at(Column::Heading));
  if (heading && *heading == 511.0) heading.reset();  // AIS "not available" sentinel
  rec.heading_deg = sanitize_course(heading);
  rec.rot = parse_double(raw.at(Column::Rot));

  StaticInfo& st = rec.statics;
  st.imo = opt_string(raw.at(Column::Imo));
  st.callsign = opt_string(raw.at(Column::Callsign));
  st.name = opt_string(raw.at(Column::Name));
  st.ship_type = opt_string(raw.at(Column::ShipType));
  st.cargo_type = opt_string(raw.at(Column::CargoType));
  st.width_m = nonnegative(parse_double(raw.at(Column::Width)));
  st.length_m = nonnegative(parse_double(raw.at(Column::Length)));
  st.pos_fix_device = opt_string(raw.at(Column::PosFixDevice));
  st.draught_m = nonnegative(parse_double(raw.at(Column::Draught)));
  st.destination = opt_string(raw.at(Column::Destination));
  st.eta = opt_string(raw.at(Column::Eta));
  st.data_source = opt_string(raw.at(Column::DataSource));
  st.a_m = nonnegative(parse_double(raw.at(Column::DimA)));
  st.b_m = nonnegative(parse_double(raw.at(Column::DimB)));
  st.c_m = nonnegative(parse_double(raw.at(Column::DimC)));
  st.d_m = nonnegative(parse_double(raw.at(Column::DimD)));
  return rec;
}

CleaningRules::CleaningRules() : aoi(geo::baltic_aoi()) {}

CleaningPipeline::CleaningPipeline(CleaningRules rules) : rules_(std::move(rules)) {}

std::optional<AisRecord> CleaningPipeline::push(AisRecord rec) {
  ++report_.rows_in;

  // MMSI is at most 9 digits (< 2^30) and timestamps fit in 32 bits within
  // this data's era, so the pair packs exactly into one key.
  const std::uint64_t key = (static_cast<std::uint64_t>(rec.mmsi) << 32) |
                            (static_cast<std::uint64_t>(rec.timestamp) & 0xffffffffULL);
  if (!seen_.insert(key).second) {
    ++report_.duplicates;
    return std::nullopt;
  }
  if (!rules_.bbox.contains(rec.position)) {
    ++report_.bad_bbox;
    return std::nullopt;
  }
  if (!geo::point_in_polygon(rec.position, rules_.aoi)) {
    ++report_.outside_aoi;
    return std::nullopt;
  }
  if (rec.mobile_type != MobileType::ClassA && rec.mobile_type != MobileType::ClassB) {
    ++report_.mobile_type_filtered;
    return std::nullopt;
  }
  if (rec.nav_status == NavStatus::Moored || rec.nav_status == NavStatus::AtAnchor ||
      rec.nav_status == NavStatus::ConstrainedByDraught) {
    ++report_.nav_status_filtered;
    return std::nullopt;
  }
  if (rec.sog_knots && *rec.sog_knots > rules_.max_sog_knots) {
    ++report_.sog_over_max;
    return std::nullopt;
  }
  if (rules_.drop_zero_sog && rec.sog_knots && *rec.sog_knots == 0.0) {
    ++report_.sog_zero;
    return std::nullopt;
  }
  ++report_.rows_out;
  return rec;
}

std::vector<AisRecord> clean(const std::vector<AisRecord>& records,
                             const CleaningRules& rules, CleaningReport& report) {
  CleaningPipeline pipe(rules);
  std::vector<AisRecord> out;
  out.reserve(records.size());
  for (const AisRecord& r : records) {
    if (auto kept = pipe.push(r)) out.push_back(std::move(*kept));
  }
  report = pipe.report();
  return out;
}

namespace {

template <typename T>
void fill_field(std::vector<AisRecord>& track, std::optional<T> StaticInfo::* field) {
  // forward
  const std::optional<T>* last = nullptr;
  for (AisRecord& r : track) {
    std::optional<T>& f = r.statics.*field;
    if (f.has_value())
      last = &f;
    else if (last)
      f = *last;
  }
  // backward
  last = nullptr;
  for (auto it = track.rbegin(); it != track.rend(); ++it) {
    std::optional<T>& f = it->statics.*field;
    if (f.has_value())
      last = &f;
    else if (last)
      f = *last;
  }
}

}  // namespace

void fill_static(std::vector<AisRecord>& track) {
  fill_field(track, &StaticInfo::imo);
  fill_field(track, &StaticInfo::callsign);
  fill_field(track, &StaticInfo::name);
  fill_field(track, &StaticInfo::ship_type);
  fill_field(track, &StaticInfo::cargo_type);
  fill_field(track, &StaticInfo::width_m);
  fill_field(track, &StaticInfo::length_m);
  fill_field(track, &StaticInfo::pos_fix_device);
  fill_field(track, &StaticInfo::draught_m);
  fill_field(track, &StaticInfo::destination);
  fill_field(track, &StaticInfo::eta);
  fill_field(track, &StaticInfo::data_source);
  fill_field(track, &StaticInfo::a_m);
  fill_field(track, &StaticInfo::b_m);
  fill_field(track, &StaticInfo::c_m);
  fill_field(track, &StaticInfo::d_m);
}

}  // namespace ais
