// aistrips — AIS trip pipeline: clean raw dumps, cut trips, extract features,
// train/tune/evaluate ship-type classifiers, backfill missing types.

#include <cctype>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aistrips/commands.hpp"
#include "aistrips/common.hpp"
#include "aistrips/log.hpp"
#include "aistrips/model.hpp"

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

ais::SmoteMode to_smote(const std::string& s) {
  auto m = ais::smote_mode_from_string(lower(s));
  if (!m) throw ais::ConfigError("unknown smote mode '" + s + "'");
  return *m;
}

ais::ml::Family to_family(const std::string& s) {
  auto f = ais::ml::family_from_string(lower(s));
  if (!f) throw ais::ConfigError("unknown model family '" + s + "'");
  return *f;
}

ais::LogLevel to_level(const std::string& s) {
  const std::string v = lower(s);
  if (v == "error") return ais::LogLevel::Error;
  if (v == "warn") return ais::LogLevel::Warn;
  if (v == "info") return ais::LogLevel::Info;
  if (v == "debug") return ais::LogLevel::Debug;
  throw ais::ConfigError("unknown log level '" + s + "'");
}

std::vector<ais::ml::Kernel> to_kernels(const std::vector<std::string>& in) {
  std::vector<ais::ml::Kernel> out;
  for (const std::string& s : in) {
    auto k = ais::ml::kernel_from_string(lower(s));
    if (!k) throw ais::ConfigError("unknown kernel '" + s + "'");
    out.push_back(*k);
  }
  return out;
}

std::vector<ais::ml::GammaMode> to_gammas(const std::vector<std::string>& in) {
  std::vector<ais::ml::GammaMode> out;
  for (const std::string& s : in) {
    auto g = ais::ml::gamma_mode_from_string(lower(s));
    if (!g) throw ais::ConfigError("unknown gamma mode '" + s + "'");
    out.push_back(*g);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AIS trip extraction and ship-type classification pipeline"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value config file (flags win)");

  ais::RunConfig cfg;
  std::string log_level = "warn";
  std::string smote = "fold";
  std::string family = "rf";
  std::string aoi_file;
  std::vector<std::string> svm_kernels, svm_gammas;
  std::vector<double> bbox;

  app.add_option("--seed", cfg.seed, "master RNG seed")->capture_default_str();
  app.add_option("--threads", cfg.threads,
                 "worker threads (0 = all cores; results do not depend on this)")
      ->capture_default_str();
  app.add_option("--log-level", log_level, "stderr verbosity: error, warn, info, debug")
      ->capture_default_str();

  app.add_option("--aoi", aoi_file,
                 "area-of-interest polygon file: \"lon lat\" per line or a "
                 "GeoJSON ring (default: built-in study area)");
  app.add_option("--bbox", bbox,
                 "pre-filter box as minLon,minLat,maxLon,maxLat")
      ->delimiter(',')
      ->expected(4);
  app.add_option("--max-sog", cfg.cleaning.max_sog_knots,
                 "drop reports faster than this many knots")
      ->capture_default_str();
  app.add_option("--drop-zero-sog", cfg.cleaning.drop_zero_sog,
                 "drop reports with SOG == 0 (true|false)")
      ->capture_default_str();

  app.add_option("--stop-radius-m", cfg.segmentation.stop_radius_m,
                 "stop-detection dwell radius, meters")
      ->capture_default_str();
  app.add_option("--stop-min-s", cfg.segmentation.stop_min_duration_s,
                 "minimum dwell to count as a stop, seconds")
      ->capture_default_str();
  app.add_option("--min-trip-km", cfg.segmentation.min_trip_length_km,
                 "discard trips sailing less than this")
      ->capture_default_str();
  app.add_option("--min-trip-points", cfg.segmentation.min_trip_points,
                 "discard trips with fewer records")
      ->capture_default_str();

  app.add_option("--test-frac", cfg.test_fraction, "held-out MMSI row fraction")
      ->capture_default_str();
  app.add_option("--folds", cfg.folds, "cross-validation folds")->capture_default_str();
  app.add_option("--smote", smote,
                 "oversampling: off, fold (inside each CV fold), or paper "
                 "(balance before folding; leaks across folds, kept for "
                 "comparability with the source results)")
      ->capture_default_str();
  app.add_option("--smote-k", cfg.smote_k, "SMOTE neighbour count")
      ->capture_default_str();
  app.add_option("--family", family, "classifier family: gnb, svm, dt, rf")
      ->capture_default_str();

  app.add_option("--grid-svm-c", cfg.grid.svm_c, "SVM C grid values");
  app.add_option("--grid-svm-kernel", svm_kernels, "SVM kernel grid (linear, rbf)");
  app.add_option("--grid-svm-gamma", svm_gammas, "SVM gamma-mode grid (scale, auto)");
  app.add_option("--grid-dt-max-depth", cfg.grid.dt_max_depth,
                 "DT max-depth grid (0 = unlimited)");
  app.add_option("--grid-dt-min-split", cfg.grid.dt_min_samples_split,
                 "DT min-samples-split grid");
  app.add_option("--grid-dt-min-leaf", cfg.grid.dt_min_samples_leaf,
                 "DT min-samples-leaf grid");
  app.add_option("--grid-rf-trees", cfg.grid.rf_n_estimators, "RF tree-count grid");
  app.add_option("--grid-rf-max-depth", cfg.grid.rf_max_depth,
                 "RF max-depth grid (0 = unlimited)");
  app.add_option("--grid-rf-min-split", cfg.grid.rf_min_samples_split,
                 "RF min-samples-split grid");

  // clean
  auto* clean = app.add_subcommand("clean", "filter raw daily dumps into one cleaned file");
  std::vector<std::string> clean_inputs;
  std::string clean_out, clean_report;
  clean->add_option("inputs", clean_inputs, "raw position-report CSVs, in day order")
      ->required()
      ->check(CLI::ExistingFile);
  clean->add_option("-o,--output", clean_out, "cleaned CSV path")->required();
  clean->add_option("--report", clean_report, "drop-counter JSON path");

  // segment
  auto* segment = app.add_subcommand("segment", "cut cleaned records into trips");
  std::string seg_in, seg_out;
  segment->add_option("-i,--input", seg_in, "cleaned CSV")->required();
  segment->add_option("-o,--output", seg_out, "trips CSV")->required();

  // featurize
  auto* featurize = app.add_subcommand("featurize", "one feature row per trip");
  std::string feat_in, feat_out, feat_report;
  featurize->add_option("-i,--input", feat_in, "trips CSV")->required();
  featurize->add_option("-o,--output", feat_out, "features CSV")->required();
  featurize->add_option("--report", feat_report, "skip-reason counter JSON");

  // split
  auto* split = app.add_subcommand("split", "MMSI-grouped train/test split");
  std::string split_features, split_out;
  split->add_option("-i,--input", split_features, "features CSV")->required();
  split->add_option("-o,--output", split_out, "split plan JSON")->required();

  // tune
  auto* tune = app.add_subcommand("tune", "grid search with stratified CV on the training side");
  std::string tune_features, tune_split, tune_out;
  tune->add_option("-i,--input", tune_features, "features CSV")->required();
  tune->add_option("--split", tune_split, "split plan JSON")->required();
  tune->add_option("-o,--output", tune_out, "CV result JSON")->required();

  // train
  auto* train = app.add_subcommand("train", "fit a model on the training rows");
  std::string train_features, train_split, train_out, train_cv;
  train->add_option("-i,--input", train_features, "features CSV")->required();
  train->add_option("--split", train_split, "split plan JSON")->required();
  train->add_option("-o,--output", train_out, "model JSON")->required();
  train->add_option("--cv", train_cv, "use the best combo from this CV result");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "score a model on the held-out rows");
  std::string eval_features, eval_split, eval_model, eval_out, eval_importance;
  evaluate->add_option("-i,--input", eval_features, "features CSV")->required();
  evaluate->add_option("--split", eval_split, "split plan JSON")->required();
  evaluate->add_option("--model", eval_model, "model JSON")->required();
  evaluate->add_option("-o,--output", eval_out, "eval report JSON")->required();
  evaluate->add_option("--importance", eval_importance,
                       "per-feature importance table CSV");

  // report
  auto* report = app.add_subcommand("report", "comparison table from eval reports");
  std::vector<std::string> report_inputs;
  std::string report_out;
  report->add_option("inputs", report_inputs, "eval JSONs, row order preserved")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("-o,--output", report_out, "table CSV")->required();

  // backfill
  auto* backfill = app.add_subcommand(
      "backfill", "predict ship types for MMSIs that never report one");
  std::vector<std::string> backfill_inputs;
  std::string backfill_model, backfill_out, backfill_geojson;
  backfill->add_option("inputs", backfill_inputs, "raw position-report CSVs")
      ->required()
      ->check(CLI::ExistingFile);
  backfill->add_option("--model", backfill_model, "model JSON")->required();
  backfill->add_option("-o,--output", backfill_out, "annotated per-record CSV")
      ->required();
  backfill->add_option("--geojson", backfill_geojson, "trip LineStrings with predictions");

  // export-geojson
  auto* export_geojson =
      app.add_subcommand("export-geojson", "trip LineStrings for map viewers");
  std::string geo_in, geo_out;
  export_geojson->add_option("-i,--input", geo_in, "trips CSV")->required();
  export_geojson->add_option("-o,--output", geo_out, "GeoJSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return ais::kExitConfig;
  }

  try {
    ais::set_log_level(to_level(log_level));
    cfg.smote = to_smote(smote);
    cfg.family = to_family(family);
    if (!svm_kernels.empty()) cfg.grid.svm_kernel = to_kernels(svm_kernels);
    if (!svm_gammas.empty()) cfg.grid.svm_gamma = to_gammas(svm_gammas);
    if (!bbox.empty())  // given lon-first: minLon,minLat,maxLon,maxLat
      cfg.cleaning.bbox = {bbox[1], bbox[0], bbox[3], bbox[2]};
    if (!aoi_file.empty()) cfg.cleaning.aoi = ais::load_aoi_file(aoi_file);
    if (cfg.test_fraction <= 0.0 || cfg.test_fraction >= 1.0)
      throw ais::ConfigError("--test-fraction must be in (0, 1)");
    if (cfg.folds < 2) throw ais::ConfigError("--folds must be at least 2");
    if (cfg.smote_k < 1) throw ais::ConfigError("--smote-k must be positive");

    if (clean->parsed()) {
      ais::run_clean(clean_inputs, clean_out, clean_report, cfg);
    } else if (segment->parsed()) {
      ais::run_segment(seg_in, seg_out, cfg);
    } else if (featurize->parsed()) {
      ais::run_featurize(feat_in, feat_out, feat_report, cfg);
    } else if (split->parsed()) {
      ais::run_split(split_features, split_out, cfg);
    } else if (tune->parsed()) {
      ais::run_tune(tune_features, tune_split, tune_out, cfg);
    } else if (train->parsed()) {
      ais::run_train(train_features, train_split, train_out, train_cv, cfg);
    } else if (evaluate->parsed()) {
      ais::run_evaluate(eval_features, eval_split, eval_model, eval_out,
                        eval_importance, cfg);
    } else if (report->parsed()) {
      ais::run_report(report_inputs, report_out);
    } else if (backfill->parsed()) {
      ais::run_backfill(backfill_model, backfill_inputs, backfill_out,
                        backfill_geojson, cfg);
    } else if (export_geojson->parsed()) {
      ais::run_export_geojson(geo_in, geo_out);
    }
  } catch (const ais::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ais::kExitConfig;
  } catch (const ais::FatalError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ais::kExitFatal;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ais::kExitFatal;
  }
  return 0;
}
