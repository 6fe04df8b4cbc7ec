#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "aistrips/matrix.hpp"
#include "aistrips/ml/forest.hpp"
#include "aistrips/ml/tree.hpp"

namespace ais::ml {

// Mean-decrease-in-impurity scores: every split credits
// n*gini(parent) - n_left*gini(left) - n_right*gini(right) to its feature,
// summed over all trees and normalized to sum 1 (all zeros for stump-only
// forests).
std::vector<double> gini_importance(const DtModel& tree, std::size_t n_features);
std::vector<double> gini_importance(const RfModel& forest, std::size_t n_features);

struct PermutationReport {
  double baseline_accuracy = 0.0;
  std::vector<double> mean_drop;  // baseline minus permuted accuracy, per feature
  std::vector<double> std_drop;   // population std over repeats
};

// Permutes one column of x at a time (repeat r of feature f draws from
// derive_seed(seed, "perm", f * n_repeats + r)) and measures the accuracy
// drop through `predict`, which must accept x in the same space it is given
// here. Deterministic for any thread count.
PermutationReport permutation_importance(
    const std::function<std::vector<int>(const Matrix&)>& predict, const Matrix& x,
    const std::vector<int>& y, std::uint64_t seed, int n_repeats = 10,
    int n_threads = 1);

}  // namespace ais::ml
