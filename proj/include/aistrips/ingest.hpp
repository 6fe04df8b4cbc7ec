#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "aistrips/records.hpp"

namespace ais {

// Canonical column slots for the 26-column position-report schema. Input
// headers are matched by name (order flexible); missing optional columns
// simply leave their fields empty.
enum class Column : int {
  Timestamp = 0,
  MobileType,
  Mmsi,
  Latitude,
  Longitude,
  NavStatus,
  Rot,
  Sog,
  Cog,
  Heading,
  Imo,
  Callsign,
  Name,
  ShipType,
  CargoType,
  Width,
  Length,
  PosFixDevice,
  Draught,
  Destination,
  Eta,
  DataSource,
  DimA,
  DimB,
  DimC,
  DimD,
};

inline constexpr std::size_t kColumnCount = 26;

// Canonical header names, index-aligned with Column.
const std::array<std::string_view, kColumnCount>& column_names();

struct RawRecord {
  std::array<std::string, kColumnCount> fields;
  std::size_t line_no = 0;

  const std::string& at(Column c) const { return fields[static_cast<int>(c)]; }
  std::string& at(Column c) { return fields[static_cast<int>(c)]; }
};

struct RowError {
  std::size_t line_no = 0;
  std::string reason;
};

// Streaming reader. Construction consumes the header (and an optional leading
// "#aistrips ..." stage line) and throws FatalError if any required column
// (timestamp, mmsi, lat, lon) is absent. Rows whose field count does not
// match the header are recorded as errors, never silently skipped.
class AisCsvReader {
 public:
  explicit AisCsvReader(std::istream& in);

  std::optional<RawRecord> next();

  const std::vector<RowError>& errors() const { return errors_; }
  std::size_t rows_seen() const { return rows_seen_; }
  const std::optional<std::string>& stage_line() const { return stage_line_; }
  // Which canonical columns the header mapped, index-aligned with Column.
  // Daily files that disagree here have different schemas.
  const std::array<bool, kColumnCount>& present_columns() const { return present_; }

 private:
  std::istream& in_;
  std::vector<int> slot_for_input_col_;  // -1 = ignored input column
  std::array<bool, kColumnCount> present_{};
  std::size_t header_cols_ = 0;
  std::size_t line_no_ = 0;
  std::size_t rows_seen_ = 0;
  std::vector<RowError> errors_;
  std::optional<std::string> stage_line_;
  std::vector<std::string> scratch_;
};

// Text -> typed record. Errors only for an unusable identity/position core
// (timestamp, mmsi, lat, lon); bad optional numerics degrade to missing.
std::variant<AisRecord, RowError> typify(const RawRecord& raw);

struct CleaningRules {
  geo::BoundingBox bbox{53.61, 4.25, 61.89, 19.54};  // Denmark extract bounds
  geo::PolygonRing aoi;                              // defaults to baltic_aoi()
  double max_sog_knots = 80.0;
  bool drop_zero_sog = true;

  CleaningRules();
};

struct CleaningReport {
  std::uint64_t rows_in = 0;
  std::uint64_t rows_out = 0;
  std::uint64_t parse_errors = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t bad_bbox = 0;
  std::uint64_t outside_aoi = 0;
  std::uint64_t mobile_type_filtered = 0;
  std::uint64_t nav_status_filtered = 0;
  std::uint64_t sog_over_max = 0;
  std::uint64_t sog_zero = 0;

  std::uint64_t total_dropped() const {
    return parse_errors + duplicates + bad_bbox + outside_aoi +
           mobile_type_filtered + nav_status_filtered + sog_over_max + sog_zero;
  }
};

// Streaming cleaner: push records one at a time, keep the survivors. The only
// cross-record state is the (mmsi, timestamp) dedup set, so memory scales
// with unique keys, not file size. Rule order is fixed: dedup, bbox, AOI,
// mobile-type whitelist, nav-status drops, sog > max, sog == 0 — one counter
// per drop.
class CleaningPipeline {
 public:
  explicit CleaningPipeline(CleaningRules rules);

  std::optional<AisRecord> push(AisRecord rec);

  CleaningReport& report() { return report_; }
  const CleaningRules& rules() const { return rules_; }

 private:
  CleaningRules rules_;
  CleaningReport report_;
  std::unordered_set<std::uint64_t> seen_;  // (mmsi << 32) | timestamp
};

// Batch convenience over CleaningPipeline.
std::vector<AisRecord> clean(const std::vector<AisRecord>& records,
                             const CleaningRules& rules, CleaningReport& report);

// Per-field forward fill then backward fill of the static/voyage fields over
// one MMSI's time-sorted track.
void fill_static(std::vector<AisRecord>& track);

}  // namespace ais
