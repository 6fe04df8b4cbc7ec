#pragma once

#include <cstdint>
#include <vector>

#include "aistrips/dataset.hpp"
#include "aistrips/matrix.hpp"
#include "aistrips/model.hpp"

namespace ais::ml {

struct CvCombo {
  Hyperparams params;
  std::vector<double> fold_accuracies;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // population std over folds
};

struct CvResult {
  Family family = Family::Rf;
  SmoteMode smote_mode = SmoteMode::Off;
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::vector<CvCombo> combos;  // grid order preserved
  std::size_t best_index = 0;   // argmax mean accuracy, first occurrence on ties
};

// Axis values for each family's tuning grid; defaults are the reference
// grids (0 depth = unlimited). Combinations enumerate with the later axes
// cycling fastest.
struct GridSpec {
  std::vector<double> svm_c{0.1, 1.0, 10.0, 100.0};
  std::vector<Kernel> svm_kernel{Kernel::Linear, Kernel::Rbf};
  std::vector<GammaMode> svm_gamma{GammaMode::Scale, GammaMode::Auto};
  std::vector<int> dt_max_depth{0, 5, 10, 20};
  std::vector<int> dt_min_samples_split{2, 5, 10};
  std::vector<int> dt_min_samples_leaf{1, 2, 4};
  std::vector<int> rf_n_estimators{100, 200};
  std::vector<int> rf_max_depth{0, 5, 10, 20};
  std::vector<int> rf_min_samples_split{2, 5, 10};
};

std::vector<Hyperparams> build_grid(Family family, const GridSpec& spec);
std::vector<Hyperparams> default_grid(Family family);

// Cross-validated grid search. Per fold, the scaler is fit on the fold's
// training rows only; smote_mode=fold oversamples inside each fold's training
// portion (seeded per fold, identical across combos); smote_mode=paper
// standardizes and oversamples the WHOLE training set first and re-folds the
// balanced rows (k and seed from fold_plan). Combos x folds fan out over
// n_threads; results are identical for any thread count.
CvResult grid_search(const std::vector<Hyperparams>& grid, const Matrix& x_raw,
                     const std::vector<int>& y, std::size_t n_classes,
                     const FoldPlan& fold_plan, SmoteMode smote_mode, int smote_k,
                     std::uint64_t seed, int n_threads = 1);

}  // namespace ais::ml
