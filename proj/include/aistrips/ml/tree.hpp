#pragma once

#include <cstdint>
#include <vector>

#include "aistrips/matrix.hpp"
#include "aistrips/rng.hpp"

namespace ais::ml {

struct DtParams {
  int max_depth = 0;  // 0 = unlimited
  int min_samples_split = 2;
  int min_samples_leaf = 1;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::vector<double> counts;  // per-class sample counts reaching this node
  double impurity = 0.0;       // Gini
  std::size_t n_samples = 0;
};

struct DtModel {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::size_t n_classes = 0;
  DtParams params;
};

// CART with Gini impurity. Candidate thresholds are midpoints between
// consecutive distinct sorted values; the best split is the exhaustive
// minimum of weighted child Gini, ties broken by lower feature index then
// lower threshold; splits must strictly reduce impurity. Recursion stops on
// purity, max_depth, min_samples_split, or lack of an improving split, and
// candidate splits violating min_samples_leaf are skipped.
DtModel dt_fit(const Matrix& x, const std::vector<int>& y, const DtParams& params,
               std::size_t n_classes);

// Forest building block: train on the given sample rows (duplicates allowed,
// i.e. a bootstrap), restricting each node's split search to a fresh uniform
// draw of max_features features when 0 < max_features < d.
DtModel dt_fit_on_sample(const Matrix& x, const std::vector<int>& y,
                         const DtParams& params, std::size_t n_classes,
                         const std::vector<std::size_t>& sample_rows,
                         std::size_t max_features, Rng* rng);

int dt_predict_one(const DtModel& model, std::span<const double> row);
std::vector<int> dt_predict(const DtModel& model, const Matrix& x);

// Class frequencies of the leaf each row lands in (n x K) — the tree's score
// vector for ROC purposes.
Matrix dt_leaf_frequencies(const DtModel& model, const Matrix& x);

}  // namespace ais::ml
