#include "aistrips/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "aistrips/common.hpp"
#include "aistrips/csv.hpp"
#include "aistrips/geojson.hpp"
#include "aistrips/log.hpp"
#include "aistrips/ml/importance.hpp"
#include "aistrips/model_io.hpp"
#include "aistrips/rng.hpp"
#include "aistrips/stage_io.hpp"

namespace ais {

using nlohmann::ordered_json;

int RunConfig::resolved_threads() const {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string RunConfig::canonical_text() const {
  std::string t;
  auto kv = [&t](std::string_view key, const std::string& value) {
    t += key;
    t += '=';
    t += value;
    t += '\n';
  };
  kv("seed", std::to_string(seed));
  kv("bbox.min_lat", format_double(cleaning.bbox.min_lat));
  kv("bbox.min_lon", format_double(cleaning.bbox.min_lon));
  kv("bbox.max_lat", format_double(cleaning.bbox.max_lat));
  kv("bbox.max_lon", format_double(cleaning.bbox.max_lon));
  // the polygon enters by content, not by where it came from
  std::string aoi_text;
  for (const geo::GeoPoint& v : cleaning.aoi.vertices) {
    aoi_text += format_double(v.lat_deg);
    aoi_text += ',';
    aoi_text += format_double(v.lon_deg);
    aoi_text += ';';
  }
  char aoi_hex[17];
  std::snprintf(aoi_hex, sizeof aoi_hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(aoi_text)));
  kv("aoi", aoi_hex);
  kv("max_sog", format_double(cleaning.max_sog_knots));
  kv("drop_zero_sog", cleaning.drop_zero_sog ? "true" : "false");
  kv("stop_radius_m", format_double(segmentation.stop_radius_m));
  kv("stop_min_duration_s", std::to_string(segmentation.stop_min_duration_s));
  kv("min_trip_length_km", format_double(segmentation.min_trip_length_km));
  kv("min_trip_points", std::to_string(segmentation.min_trip_points));
  kv("test_fraction", format_double(test_fraction));
  kv("folds", std::to_string(folds));
  kv("smote", std::string(to_string(smote)));
  kv("smote_k", std::to_string(smote_k));
  kv("family", std::string(to_string(family)));
  auto join_num = [](const auto& values) {
    std::string s;
    for (const auto& v : values) {
      if (!s.empty()) s += ',';
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>)
        s += format_double(v);
      else
        s += std::to_string(v);
    }
    return s;
  };
  kv("grid.svm_c", join_num(grid.svm_c));
  {
    std::string s;
    for (ml::Kernel k : grid.svm_kernel) {
      if (!s.empty()) s += ',';
      s += std::string(to_string(k));
    }
    kv("grid.svm_kernel", s);
    s.clear();
    for (ml::GammaMode g : grid.svm_gamma) {
      if (!s.empty()) s += ',';
      s += std::string(to_string(g));
    }
    kv("grid.svm_gamma", s);
  }
  kv("grid.dt_max_depth", join_num(grid.dt_max_depth));
  kv("grid.dt_min_samples_split", join_num(grid.dt_min_samples_split));
  kv("grid.dt_min_samples_leaf", join_num(grid.dt_min_samples_leaf));
  kv("grid.rf_n_estimators", join_num(grid.rf_n_estimators));
  kv("grid.rf_max_depth", join_num(grid.rf_max_depth));
  kv("grid.rf_min_samples_split", join_num(grid.rf_min_samples_split));
  return t;
}

std::uint64_t RunConfig::config_hash() const { return fnv1a64(canonical_text()); }

namespace {

// Shared by clean and backfill: raw dumps -> deduped, filtered, statically
// filled records sorted by (mmsi, timestamp).
std::vector<AisRecord> clean_inputs(const std::vector<std::string>& inputs,
                                    const RunConfig& cfg, CleaningReport& report) {
  if (inputs.empty()) throw ConfigError("need at least one input file");
  CleaningPipeline pipeline(cfg.cleaning);
  std::vector<AisRecord> kept;
  std::optional<std::array<bool, kColumnCount>> schema;
  for (const std::string& path : inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FatalError("cannot read " + path);
    AisCsvReader reader(in);
    if (schema && *schema != reader.present_columns())
      throw FatalError(path + ": column set differs from the first input file");
    if (!schema) schema = reader.present_columns();
    while (auto raw = reader.next()) {
      auto typed = typify(*raw);
      if (auto* err = std::get_if<RowError>(&typed)) {
        ++pipeline.report().rows_in;
        ++pipeline.report().parse_errors;
        log_msg(LogLevel::Debug,
                path + ":" + std::to_string(err->line_no) + ": " + err->reason);
        continue;
      }
      if (auto out = pipeline.push(std::move(std::get<AisRecord>(typed))))
        kept.push_back(std::move(*out));
    }
    for (const RowError& err : reader.errors()) {
      ++pipeline.report().rows_in;
      ++pipeline.report().parse_errors;
      log_msg(LogLevel::Debug,
              path + ":" + std::to_string(err.line_no) + ": " + err.reason);
    }
  }
  std::sort(kept.begin(), kept.end(), [](const AisRecord& a, const AisRecord& b) {
    if (a.mmsi != b.mmsi) return a.mmsi < b.mmsi;
    return a.timestamp < b.timestamp;
  });
  // per-MMSI static fill over each contiguous run
  std::size_t start = 0;
  for (std::size_t i = 1; i <= kept.size(); ++i) {
    if (i == kept.size() || kept[i].mmsi != kept[start].mmsi) {
      std::vector<AisRecord> track(std::make_move_iterator(kept.begin() + start),
                                   std::make_move_iterator(kept.begin() + i));
      fill_static(track);
      std::move(track.begin(), track.end(), kept.begin() + start);
      start = i;
    }
  }
  report = pipeline.report();
  return kept;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> assign_rows(
    const std::vector<std::int64_t>& row_mmsi, const SplitPlan& plan) {
  std::unordered_set<std::int64_t> test(plan.test_mmsi.begin(), plan.test_mmsi.end());
  std::unordered_set<std::int64_t> train(plan.train_mmsi.begin(), plan.train_mmsi.end());
  std::vector<std::size_t> train_idx, test_idx;
  for (std::size_t i = 0; i < row_mmsi.size(); ++i) {
    if (test.count(row_mmsi[i]))
      test_idx.push_back(i);
    else if (train.count(row_mmsi[i]))
      train_idx.push_back(i);
    else
      throw FatalError("MMSI " + std::to_string(row_mmsi[i]) +
                       " is not covered by the split plan; regenerate the split");
  }
  return {std::move(train_idx), std::move(test_idx)};
}

std::vector<int> take_labels(const std::vector<int>& y, const std::vector<std::size_t>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(y[i]);
  return out;
}

// DMA dumps mark an unknown type as "Undefined"; treat that (and literal
// "Unknown") the same as an absent field when deciding what to backfill.
bool has_usable_ship_type(const std::optional<std::string>& ship_type) {
  if (!ship_type) return false;
  std::string v;
  for (char c : *ship_type) v.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return v != "undefined" && v != "unknown";
}

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v * 100.0);
  return buf;
}

}  // namespace

CleanOutcome run_clean(const std::vector<std::string>& inputs, const std::string& out_csv,
                       const std::string& report_json, const RunConfig& cfg) {
  CleaningReport report;
  std::vector<AisRecord> records = clean_inputs(inputs, cfg, report);
  write_cleaned_csv(out_csv, records, cfg.config_hash());

  if (!report_json.empty()) {
    ordered_json j;
    j["schema"] = "aistrips.clean_report/v1";
    j["rows_in"] = report.rows_in;
    j["rows_out"] = report.rows_out;
    j["dropped"]["parse_errors"] = report.parse_errors;
    j["dropped"]["duplicates"] = report.duplicates;
    j["dropped"]["outside_bbox"] = report.bad_bbox;
    j["dropped"]["outside_aoi"] = report.outside_aoi;
    j["dropped"]["mobile_type"] = report.mobile_type_filtered;
    j["dropped"]["nav_status"] = report.nav_status_filtered;
    j["dropped"]["sog_over_max"] = report.sog_over_max;
    j["dropped"]["sog_zero"] = report.sog_zero;
    j["total_dropped"] = report.total_dropped();
    std::ofstream out(report_json, std::ios::binary);
    if (!out) throw FatalError("cannot write " + report_json);
    out << j.dump(2) << '\n';
  }
  log_msg(LogLevel::Info, "clean: " + std::to_string(report.rows_in) + " rows in, " +
                              std::to_string(report.rows_out) + " kept");
  return {report, inputs.size()};
}

SegmentOutcome run_segment(const std::string& cleaned_csv, const std::string& trips_csv,
                           const RunConfig& cfg) {
  std::vector<Track> tracks = group_tracks(read_cleaned_csv(cleaned_csv));
  std::vector<Trajectory> trips = segment_all(tracks, cfg.segmentation);
  write_trips_csv(trips_csv, trips, cfg.config_hash());
  log_msg(LogLevel::Info, "segment: " + std::to_string(tracks.size()) + " tracks -> " +
                              std::to_string(trips.size()) + " trips");
  return {tracks.size(), trips.size()};
}

FeaturizeOutcome run_featurize(const std::string& trips_csv,
                               const std::string& features_csv,
                               const std::string& report_json, const RunConfig& cfg) {
  std::vector<Trajectory> trips = read_trips_csv(trips_csv);
  FeaturizeOutcome outcome;
  outcome.trips_in = trips.size();
  std::vector<FeatureRow> rows;
  rows.reserve(trips.size());
  for (const Trajectory& trip : trips) {
    if (auto row = assemble(trip, /*require_label=*/false, outcome.skipped))
      rows.push_back(std::move(*row));
  }
  outcome.rows_out = rows.size();
  write_features_csv(features_csv, rows, cfg.config_hash());
  if (!report_json.empty()) {
    ordered_json j;
    j["schema"] = "aistrips.featurize_report/v1";
    j["trips_in"] = outcome.trips_in;
    j["rows_out"] = outcome.rows_out;
    j["skipped"]["missing_dims"] = outcome.skipped.missing_dims;
    j["skipped"]["missing_sog"] = outcome.skipped.missing_sog;
    j["skipped"]["missing_ship_type"] = outcome.skipped.missing_ship_type;
    std::ofstream out(report_json, std::ios::binary);
    if (!out) throw FatalError("cannot write " + report_json);
    out << j.dump(2) << '\n';
  }
  log_msg(LogLevel::Info, "featurize: " + std::to_string(rows.size()) + " of " +
                              std::to_string(trips.size()) + " trips kept");
  return outcome;
}

void run_split(const std::string& features_csv, const std::string& split_json,
               const RunConfig& cfg) {
  PreparedDataset prepared = prepare(read_features_csv(features_csv));
  SplitPlan plan = grouped_split(prepared.mmsi, cfg.test_fraction, cfg.seed);
  save_split(plan, split_json);
  log_msg(LogLevel::Info,
          "split: " + std::to_string(plan.train_indices.size()) + " train rows (" +
              std::to_string(plan.train_mmsi.size()) + " MMSIs), " +
              std::to_string(plan.test_indices.size()) + " test rows (" +
              std::to_string(plan.test_mmsi.size()) + " MMSIs)");
}

void run_tune(const std::string& features_csv, const std::string& split_json,
              const std::string& cv_json, const RunConfig& cfg) {
  PreparedDataset prepared = prepare(read_features_csv(features_csv));
  SplitPlan plan = load_split(split_json);
  auto [train_idx, test_idx] = assign_rows(prepared.mmsi, plan);
  Matrix x = prepared.x.take(train_idx);
  std::vector<int> y = take_labels(prepared.y, train_idx);
  FoldPlan folds =
      stratified_kfold(y, cfg.folds, cfg.seed, &prepared.ship_codec.classes);
  std::vector<ml::Hyperparams> grid = ml::build_grid(cfg.family, cfg.grid);
  ml::CvResult cv =
      ml::grid_search(grid, x, y, prepared.ship_codec.size(), folds, cfg.smote,
                      cfg.smote_k, cfg.seed, cfg.resolved_threads());
  save_cv(cv, cv_json);
  const ml::CvCombo& best = cv.combos[cv.best_index];
  log_msg(LogLevel::Info,
          "tune: best combo " + std::to_string(cv.best_index) + " of " +
              std::to_string(cv.combos.size()) + ", cv accuracy " +
              format_double(best.mean_accuracy) + " +/- " +
              format_double(best.std_accuracy));
}

void run_train(const std::string& features_csv, const std::string& split_json,
               const std::string& model_json, const std::string& cv_json,
               const RunConfig& cfg) {
  PreparedDataset prepared = prepare(read_features_csv(features_csv));
  SplitPlan plan = load_split(split_json);
  auto [train_idx, test_idx] = assign_rows(prepared.mmsi, plan);
  Matrix x = prepared.x.take(train_idx);
  std::vector<int> y = take_labels(prepared.y, train_idx);

  ml::Hyperparams params = ml::default_params(cfg.family);
  bool tuned = false;
  if (!cv_json.empty()) {
    ml::CvResult cv = load_cv(cv_json);
    params = cv.combos[cv.best_index].params;
    tuned = true;
  }
  ml::TrainedModel model = ml::train_model(
      params, x, y, prepared.ship_codec, prepared.cargo_codec, prepared.mobile_codec,
      prepared.feature_names, cfg.seed, cfg.smote, cfg.smote_k, cfg.resolved_threads());
  model.tuned = tuned;
  save_model(model, model_json);
  log_msg(LogLevel::Info, "train: " + std::string(to_string(model.family)) + " on " +
                              std::to_string(y.size()) + " rows");
}

void run_evaluate(const std::string& features_csv, const std::string& split_json,
                  const std::string& model_json, const std::string& eval_json,
                  const std::string& importance_csv, const RunConfig& cfg) {
  std::vector<FeatureRow> rows = read_features_csv(features_csv);
  ml::TrainedModel model = load_model(model_json);
  SplitPlan plan = load_split(split_json);

  std::unordered_set<std::int64_t> test_mmsi(plan.test_mmsi.begin(),
                                             plan.test_mmsi.end());
  std::vector<FeatureRow> candidates;
  for (FeatureRow& row : rows) {
    if (!test_mmsi.count(row.mmsi)) continue;
    if (!row.ship_type || model.ship_codec.encode(*row.ship_type) < 0) continue;
    candidates.push_back(std::move(row));
  }
  std::vector<std::size_t> kept;
  Matrix x = feature_matrix_for_predict(candidates, model.cargo_codec,
                                        model.mobile_codec, kept);
  std::vector<int> y_true;
  y_true.reserve(kept.size());
  for (std::size_t i : kept)
    y_true.push_back(model.ship_codec.encode(*candidates[i].ship_type));

  if (y_true.empty())
    log_msg(LogLevel::Warn, "evaluate: no usable test rows; writing empty report");

  const std::vector<int> pred = model.predict(x);
  ml::EvalReport report = ml::evaluate(y_true, pred, model.ship_codec.size());
  const Matrix scores = model.scores(x);
  report.auc_macro = ml::roc_auc_ovr(scores, y_true, &report.auc_per_class);

  EvalMeta meta;
  meta.model_name = std::string(to_string(model.family));
  meta.tuned = model.tuned;
  meta.smote = model.smote_mode;
  meta.n_rows = y_true.size();
  save_eval(report, model.ship_codec.classes, meta, eval_json);

  if (!importance_csv.empty()) {
    const std::size_t d = model.feature_names.size();
    std::vector<double> gini;
    if (const auto* dt = std::get_if<ml::DtModel>(&model.fitted))
      gini = ml::gini_importance(*dt, d);
    else if (const auto* rf = std::get_if<ml::RfModel>(&model.fitted))
      gini = ml::gini_importance(*rf, d);
    ml::PermutationReport perm;
    if (!y_true.empty())
      perm = ml::permutation_importance(
          [&model](const Matrix& m) { return model.predict(m); }, x, y_true,
          cfg.seed, 10, cfg.resolved_threads());
    std::ofstream out(importance_csv, std::ios::binary);
    if (!out) throw FatalError("cannot write " + importance_csv);
    out << "feature,gini_importance,perm_mean_drop,perm_std_drop\n";
    for (std::size_t f = 0; f < d; ++f) {
      out << csv_escape(model.feature_names[f]) << ',';
      if (!gini.empty()) out << format_double(gini[f]);
      out << ',';
      if (!perm.mean_drop.empty())
        out << format_double(perm.mean_drop[f]) << ','
            << format_double(perm.std_drop[f]);
      else
        out << ',';
      out << '\n';
    }
  }
  log_msg(LogLevel::Info, "evaluate: accuracy " + format_double(report.accuracy) +
                              " on " + std::to_string(y_true.size()) + " rows");
}

void run_report(const std::vector<std::string>& eval_jsons, const std::string& out_csv) {
  if (eval_jsons.empty()) throw ConfigError("report needs at least one eval file");
  std::ofstream out(out_csv, std::ios::binary);
  if (!out) throw FatalError("cannot write " + out_csv);
  out << "model,tuned,smote,accuracy,precision,recall,f1\n";
  for (const std::string& path : eval_jsons) {
    nlohmann::json j = load_json_checked(path, "aistrips.eval/v1");
    out << j.at("model").get<std::string>() << ','
        << (j.at("tuned").get<bool>() ? "tuned" : "default") << ','
        << j.at("smote").get<std::string>() << ','
        << pct(j.at("accuracy").get<double>()) << ','
        << pct(j.at("macro").at("precision").get<double>()) << ','
        << pct(j.at("macro").at("recall").get<double>()) << ','
        << pct(j.at("macro").at("f1").get<double>()) << '\n';
  }
  if (!out) throw FatalError("write failed: " + out_csv);
}

BackfillOutcome run_backfill(const std::string& model_json,
                             const std::vector<std::string>& inputs,
                             const std::string& out_csv, const std::string& geojson_path,
                             const RunConfig& cfg) {
  ml::TrainedModel model = load_model(model_json);
  CleaningReport report;
  std::vector<AisRecord> records = clean_inputs(inputs, cfg, report);
  std::vector<Track> tracks = group_tracks(std::move(records));
  std::vector<Trajectory> trips = segment_all(tracks, cfg.segmentation);

  // feature rows for the trips whose MMSI never reported a usable type
  std::vector<FeatureRow> missing_rows;
  std::vector<std::int64_t> missing_trip_ids;
  AssembleCounters counters;
  for (const Trajectory& trip : trips) {
    if (has_usable_ship_type(trip.records.front().statics.ship_type)) continue;
    if (auto row = assemble(trip, /*require_label=*/false, counters)) {
      missing_trip_ids.push_back(trip.trip_id);
      missing_rows.push_back(std::move(*row));
    }
  }

  std::unordered_map<std::int64_t, std::string> trip_pred;        // by trip_id
  std::unordered_map<std::int64_t, std::string> mmsi_mode;        // by mmsi
  BackfillOutcome outcome;
  outcome.trips = trips.size();
  if (!missing_rows.empty()) {
    std::vector<std::size_t> kept;
    Matrix x = feature_matrix_for_predict(missing_rows, model.cargo_codec,
                                          model.mobile_codec, kept);
    const std::vector<int> pred = model.predict(x);
    std::unordered_map<std::int64_t, std::vector<int>> votes_by_mmsi;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const FeatureRow& row = missing_rows[kept[i]];
      trip_pred[missing_trip_ids[kept[i]]] = model.ship_codec.decode(pred[i]);
      auto& votes = votes_by_mmsi[row.mmsi];
      votes.resize(model.ship_codec.size(), 0);
      ++votes[static_cast<std::size_t>(pred[i])];
    }
    for (const auto& [mmsi, votes] : votes_by_mmsi) {
      std::size_t best = 0;
      for (std::size_t c = 1; c < votes.size(); ++c)
        if (votes[c] > votes[best]) best = c;  // ties -> lowest class code
      mmsi_mode[mmsi] = model.ship_codec.decode(best);
    }
    outcome.trips_predicted = kept.size();
    outcome.mmsi_predicted = votes_by_mmsi.size();
  }
  if (trip_pred.empty())
    log_msg(LogLevel::Warn, "backfill: no classifiable type-less trips in the input");

  // annotated per-record CSV: trips layout + the two prediction columns
  {
    std::ofstream out(out_csv, std::ios::binary);
    if (!out) throw FatalError("cannot write " + out_csv);
    out << stage_header_line("backfill", cfg.config_hash()) << '\n';
    out << "trip_id," << record_csv_header()
        << ",predicted_ship_type,predicted_ship_type_mmsi_mode\n";
    std::vector<std::string> fields;
    for (const Trajectory& trip : trips) {
      const auto tp = trip_pred.find(trip.trip_id);
      const auto mp = mmsi_mode.find(trip.mmsi);
      for (const AisRecord& rec : trip.records) {
        fields.clear();
        fields.push_back(std::to_string(trip.trip_id));
        record_csv_fields(rec, fields);
        fields.push_back(tp != trip_pred.end() ? tp->second : std::string());
        fields.push_back(mp != mmsi_mode.end() ? mp->second : std::string());
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (i) out << ',';
          out << fields[i];
        }
        out << '\n';
      }
    }
    if (!out) throw FatalError("write failed: " + out_csv);
  }

  if (!geojson_path.empty()) write_geojson(geojson_path, trips, trip_pred);
  log_msg(LogLevel::Info,
          "backfill: predicted " + std::to_string(outcome.trips_predicted) +
              " trips across " + std::to_string(outcome.mmsi_predicted) + " MMSIs");
  return outcome;
}

geo::PolygonRing load_aoi_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read AOI file " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw ConfigError("AOI file " + path + " is empty");

  std::vector<geo::GeoPoint> pts;
  if (text[first] == '{' || text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("AOI file " + path + ": " + std::string(e.what()));
    }
    if (j.is_object() && j.contains("geometry")) j = j["geometry"];
    if (j.is_object() && j.contains("coordinates")) j = j["coordinates"];
    // Polygon coordinates nest rings; take the outer one. A bare ring
    // ([[lon,lat],...]) is accepted as-is.
    if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() &&
        j[0][0].is_array())
      j = j[0];
    if (!j.is_array())
      throw ConfigError("AOI file " + path + ": no coordinate ring found");
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() < 2 || !pair[0].is_number() ||
          !pair[1].is_number())
        throw ConfigError("AOI file " + path + ": ring entries must be [lon, lat]");
      pts.push_back({pair[1].get<double>(), pair[0].get<double>()});
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      for (char& c : line)
        if (c == ',') c = ' ';
      std::istringstream ls(line);
      double lon, lat;
      if (!(ls >> lon)) continue;  // blank / comment-only line
      if (!(ls >> lat))
        throw ConfigError("AOI file " + path + " line " + std::to_string(lineno) +
                          ": expected \"lon lat\"");
      pts.push_back({lat, lon});
    }
  }
  if (pts.size() < 3)
    throw ConfigError("AOI file " + path + ": need at least 3 vertices");
  return geo::PolygonRing{std::move(pts)};
}

void run_export_geojson(const std::string& trips_csv, const std::string& geojson_path) {
  write_geojson(geojson_path, read_trips_csv(trips_csv));
}

}  // namespace ais
