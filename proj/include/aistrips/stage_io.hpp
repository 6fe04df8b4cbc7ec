#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aistrips/features.hpp"
#include "aistrips/ingest.hpp"
#include "aistrips/segmentation.hpp"

namespace ais {

// Every stage CSV opens with "#aistrips <stage> v1 config=<16-hex fnv1a>" so
// downstream stages can refuse mismatched schema versions. The config hash is
// informational (recorded, not enforced).
std::string stage_header_line(std::string_view stage, std::uint64_t config_hash);

struct StageTag {
  std::string stage;
  std::string version;
  std::uint64_t config_hash = 0;
};

// Parses a header line; fatal (with both versions in the message) when the
// stage or version differs from what the caller expects.
StageTag check_stage_line(const std::optional<std::string>& line,
                          std::string_view expected_stage);

// --- cleaned records: the canonical 26-column layout --------------------

// The canonical comma-joined column header and one record rendered into
// those columns — shared by every record-level stage writer.
std::string record_csv_header();
void record_csv_fields(const AisRecord& rec, std::vector<std::string>& out);

void write_cleaned_csv(const std::string& path, const std::vector<AisRecord>& records,
                       std::uint64_t config_hash);

// Reads back a cleaned stage file (stage line required). Row-level parse
// errors in our own artifact mean corruption — fatal.
std::vector<AisRecord> read_cleaned_csv(const std::string& path);

// --- segmented trips: trip_id + the canonical 26 columns ----------------

void write_trips_csv(const std::string& path, const std::vector<Trajectory>& trips,
                     std::uint64_t config_hash);

std::vector<Trajectory> read_trips_csv(const std::string& path);

// --- per-trip features: the full 39-column source feature table ---------

const std::vector<std::string>& feature_csv_columns();

void write_features_csv(const std::string& path, const std::vector<FeatureRow>& rows,
                        std::uint64_t config_hash);

std::vector<FeatureRow> read_features_csv(const std::string& path);

}  // namespace ais
