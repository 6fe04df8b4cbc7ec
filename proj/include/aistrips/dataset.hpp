#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aistrips/features.hpp"
#include "aistrips/matrix.hpp"

namespace ais {

// Category name <-> integer code, alphabetical. Used for the ship-type label
// (Cargo=0, Fishing=1, HSC=2, Passenger=3, Tanker=4) and reused for the
// cargo-type and mobile-type categoricals.
struct LabelCodec {
  std::vector<std::string> classes;  // sorted ascending

  static LabelCodec fit(std::vector<std::string> values);
  static const LabelCodec& ship_types();

  // -1 for a category not seen at fit time.
  int encode(std::string_view name) const;
  const std::string& decode(std::size_t code) const;
  std::size_t size() const { return classes.size(); }
};

// Per-feature z-scoring with population moments; zero-variance features
// transform to 0 and inverse-transform back to their mean.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> stddev;

  static Standardizer fit(const Matrix& x);
  Matrix transform(const Matrix& x) const;
  Matrix inverse(const Matrix& z) const;
};

struct SplitPlan {
  double test_fraction = 0.2;
  std::uint64_t seed = 0;
  std::vector<std::size_t> train_indices;  // ascending row indices
  std::vector<std::size_t> test_indices;
  std::vector<std::int64_t> train_mmsi;  // sorted, disjoint from test_mmsi
  std::vector<std::int64_t> test_mmsi;
};

struct FoldPlan {
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::size_t>> folds;  // validation indices per fold
};

enum class SmoteMode { Off, Fold, Paper };
std::optional<SmoteMode> smote_mode_from_string(std::string_view s);
std::string_view to_string(SmoteMode m);

// Model-ready view of the feature rows: the 5 target classes only, encoded
// categoricals, no missing values. X is raw (unstandardized) — scaling is fit
// downstream on training rows only.
struct PreparedDataset {
  Matrix x;  // n x 31
  std::vector<int> y;
  std::vector<std::int64_t> mmsi;
  std::vector<std::int64_t> trip_id;
  LabelCodec ship_codec;
  LabelCodec cargo_codec;
  LabelCodec mobile_codec;
  std::vector<std::string> feature_names;
  std::uint64_t dropped_unknown_class = 0;
  std::uint64_t dropped_missing = 0;
};

// Fatal when nothing survives.
PreparedDataset prepare(const std::vector<FeatureRow>& rows);

// Feature matrix for prediction with frozen codecs (backfill path). Rows with
// missing numerics are skipped; kept_rows receives the surviving row indices.
// Unseen/missing categoricals encode to -1.
Matrix feature_matrix_for_predict(const std::vector<FeatureRow>& rows,
                                  const LabelCodec& cargo_codec,
                                  const LabelCodec& mobile_codec,
                                  std::vector<std::size_t>& kept_rows);

// MMSI-grouped train/test split: shuffle the unique MMSIs by seed, assign
// them to test until the test row count first reaches test_fraction * total.
// All of an MMSI's rows travel together.
SplitPlan grouped_split(const std::vector<std::int64_t>& row_mmsi,
                        double test_fraction, std::uint64_t seed);

// Stratified k-fold: per class, shuffle indices by seed and deal round-robin
// starting at fold 0. Fatal when a present class has fewer than k members.
FoldPlan stratified_kfold(const std::vector<int>& labels, std::size_t k,
                          std::uint64_t seed,
                          const std::vector<std::string>* class_names = nullptr);

struct SmoteResult {
  Matrix x;
  std::vector<int> y;
  std::vector<bool> synthetic;  // false for the original rows
};

// Oversample every minority class to the majority count by interpolating
// between a random member and one of its k nearest same-class neighbours
// (Euclidean; expects standardized features). Original rows pass through
// unchanged, synthetics append per class in ascending code order. Each class
// draws from its own derived RNG stream.
SmoteResult smote(const Matrix& x, const std::vector<int>& y, int k_neighbors,
                  std::uint64_t seed);

}  // namespace ais
