#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aistrips/features.hpp"
#include "aistrips/ingest.hpp"
#include "aistrips/ml/grid.hpp"
#include "aistrips/model.hpp"
#include "aistrips/segmentation.hpp"

namespace ais {

// Everything a pipeline run can be told. Every field has the documented
// default; the CLI overlays config-file values, then flags.
struct RunConfig {
  std::uint64_t seed = 42;
  int threads = 0;  // 0 = hardware concurrency (results identical either way)

  CleaningRules cleaning;
  SegmentationParams segmentation;

  double test_fraction = 0.2;
  std::size_t folds = 5;

  SmoteMode smote = SmoteMode::Fold;
  int smote_k = 5;

  ml::Family family = ml::Family::Rf;
  ml::GridSpec grid;

  int resolved_threads() const;
  // Canonical key=value rendering of every semantic field (threads excluded —
  // it cannot change any output byte). Hashed into stage headers.
  std::string canonical_text() const;
  std::uint64_t config_hash() const;
};

struct CleanOutcome {
  CleaningReport report;
  std::size_t files = 0;
};

// Reads the raw daily dumps in the order given (dedup keeps first sight),
// drops per the fixed rule order, fills static fields per MMSI, writes rows
// sorted by (mmsi, timestamp) plus a counters JSON. Daily files whose mapped
// column sets differ are refused.
CleanOutcome run_clean(const std::vector<std::string>& inputs, const std::string& out_csv,
                       const std::string& report_json, const RunConfig& cfg);

struct SegmentOutcome {
  std::size_t tracks = 0;
  std::size_t trips = 0;
};

SegmentOutcome run_segment(const std::string& cleaned_csv, const std::string& trips_csv,
                           const RunConfig& cfg);

struct FeaturizeOutcome {
  std::size_t trips_in = 0;
  std::size_t rows_out = 0;
  AssembleCounters skipped;
};

// report_json (optional) gets the skip-reason counters as a sidecar.
FeaturizeOutcome run_featurize(const std::string& trips_csv,
                               const std::string& features_csv,
                               const std::string& report_json, const RunConfig& cfg);

void run_split(const std::string& features_csv, const std::string& split_json,
               const RunConfig& cfg);

void run_tune(const std::string& features_csv, const std::string& split_json,
              const std::string& cv_json, const RunConfig& cfg);

// params come from cv_json's best combo when given, family defaults otherwise.
void run_train(const std::string& features_csv, const std::string& split_json,
               const std::string& model_json, const std::string& cv_json,
               const RunConfig& cfg);

// importance_csv (optional): per-feature table — split-gain importance for
// tree models plus seeded permutation importance on the test rows.
void run_evaluate(const std::string& features_csv, const std::string& split_json,
                  const std::string& model_json, const std::string& eval_json,
                  const std::string& importance_csv, const RunConfig& cfg);

// One CSV row per eval file, in the order given, percentages to 2 decimals.
void run_report(const std::vector<std::string>& eval_jsons, const std::string& out_csv);

struct BackfillOutcome {
  std::size_t trips = 0;
  std::size_t trips_predicted = 0;
  std::size_t mmsi_predicted = 0;
};

// clean + segment + featurize the new dumps in memory, predict a ship type
// for every trip whose MMSI lacks one, and write (a) a per-record CSV with
// per-trip predictions plus the MMSI-majority type and (b) trip LineStrings.
// No classifiable trips is a success with empty outputs and a warning.
BackfillOutcome run_backfill(const std::string& model_json,
                             const std::vector<std::string>& inputs,
                             const std::string& out_csv, const std::string& geojson_path,
                             const RunConfig& cfg);

void run_export_geojson(const std::string& trips_csv, const std::string& geojson_path);

// Polygon file: either "lon lat" per line (blank lines and # comments ok) or
// GeoJSON (a Polygon geometry/feature, or a bare ring array of [lon, lat]).
geo::PolygonRing load_aoi_file(const std::string& path);

}  // namespace ais
