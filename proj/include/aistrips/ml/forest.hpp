#pragma once

#include <cstdint>
#include <vector>

#include "aistrips/ml/tree.hpp"

namespace ais::ml {

struct RfParams {
  int n_estimators = 100;
  int max_depth = 0;  // 0 = unlimited
  int min_samples_split = 2;
  int min_samples_leaf = 1;
  bool bootstrap = true;
  int max_features = -1;  // -1 = floor(sqrt(d)); 0 or >= d = all features
};

struct RfModel {
  std::vector<DtModel> trees;
  RfParams params;
  std::uint64_t seed = 0;  // master seed; tree t uses derive_seed(seed, "rf-tree", t)
  std::size_t n_classes = 0;
};

// Bagged CART ensemble. Each tree gets its own derived RNG stream that feeds
// first the bootstrap draw (n rows with replacement) and then the per-node
// feature subsets, so any single tree is replayable in isolation. Trees may
// be fit in parallel; results are identical for any thread count.
RfModel rf_fit(const Matrix& x, const std::vector<int>& y, const RfParams& params,
               std::size_t n_classes, std::uint64_t seed, int n_threads = 1);

// Majority vote over trees, lowest class index on ties.
std::vector<int> rf_predict(const RfModel& model, const Matrix& x);

// Fraction of trees voting for each class (n x K) — the forest's score.
Matrix rf_vote_fractions(const RfModel& model, const Matrix& x);

}  // namespace ais::ml
