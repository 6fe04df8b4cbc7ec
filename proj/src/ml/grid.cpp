#include "aistrips/ml/grid.hpp"

#include <cmath>

#include "aistrips/common.hpp"
#include "aistrips/parallel.hpp"
#include "aistrips/rng.hpp"

namespace ais::ml {

std::vector<Hyperparams> build_grid(Family family, const GridSpec& spec) {
  std::vector<Hyperparams> grid;
  switch (family) {
    case Family::Gnb:
      grid.push_back(GnbParams{});
      break;
    case Family::Svm:
      for (double c : spec.svm_c)
        for (Kernel k : spec.svm_kernel)
          for (GammaMode g : spec.svm_gamma) {
            SvmParams p;
            p.c = c;
            p.kernel = k;
            p.gamma = g;
            grid.push_back(p);
          }
      break;
    case Family::Dt:
      for (int depth : spec.dt_max_depth)
        for (int split : spec.dt_min_samples_split)
          for (int leaf : spec.dt_min_samples_leaf)
            grid.push_back(DtParams{depth, split, leaf});
      break;
    case Family::Rf:
      for (int trees : spec.rf_n_estimators)
        for (int depth : spec.rf_max_depth)
          for (int split : spec.rf_min_samples_split) {
            RfParams p;
            p.n_estimators = trees;
            p.max_depth = depth;
            p.min_samples_split = split;
            grid.push_back(p);
          }
      break;
  }
  if (grid.empty()) throw ConfigError("empty tuning grid (an axis has no values)");
  return grid;
}

std::vector<Hyperparams> default_grid(Family family) {
  return build_grid(family, GridSpec{});
}

namespace {

struct FoldData {
  Matrix x_train;
  std::vector<int> y_train;
  Matrix x_val;
  std::vector<int> y_val;
};

std::vector<FoldData> build_folds(const Matrix& x_raw, const std::vector<int>& y,
                                  const FoldPlan& plan, SmoteMode mode, int smote_k,
                                  std::uint64_t seed) {
  std::vector<FoldData> folds(plan.k);

  if (mode == SmoteMode::Paper) {
    // Whole-train standardize + SMOTE, then re-fold the balanced rows.
    Standardizer scaler = Standardizer::fit(x_raw);
    SmoteResult balanced =
        smote(scaler.transform(x_raw), y, smote_k, derive_seed(seed, "smote"));
    FoldPlan folds2 = stratified_kfold(balanced.y, plan.k, plan.seed);
    std::vector<std::size_t> fold_of(balanced.y.size());
    for (std::size_t f = 0; f < folds2.k; ++f)
      for (std::size_t i : folds2.folds[f]) fold_of[i] = f;
    for (std::size_t f = 0; f < folds2.k; ++f) {
      std::vector<std::size_t> train_idx;
      for (std::size_t i = 0; i < fold_of.size(); ++i)
        if (fold_of[i] != f) train_idx.push_back(i);
      FoldData& fd = folds[f];
      fd.x_train = balanced.x.take(train_idx);
      fd.x_val = balanced.x.take(folds2.folds[f]);
      for (std::size_t i : train_idx) fd.y_train.push_back(balanced.y[i]);
      for (std::size_t i : folds2.folds[f]) fd.y_val.push_back(balanced.y[i]);
    }
    return folds;
  }

  std::vector<std::size_t> fold_of(y.size());
  for (std::size_t f = 0; f < plan.k; ++f)
    for (std::size_t i : plan.folds[f]) fold_of[i] = f;

  for (std::size_t f = 0; f < plan.k; ++f) {
    std::vector<std::size_t> train_idx;
    for (std::size_t i = 0; i < fold_of.size(); ++i)
      if (fold_of[i] != f) train_idx.push_back(i);

    Matrix x_train_raw = x_raw.take(train_idx);
    Standardizer scaler = Standardizer::fit(x_train_raw);

    FoldData& fd = folds[f];
    fd.x_train = scaler.transform(x_train_raw);
    fd.x_val = scaler.transform(x_raw.take(plan.folds[f]));
    for (std::size_t i : train_idx) fd.y_train.push_back(y[i]);
    for (std::size_t i : plan.folds[f]) fd.y_val.push_back(y[i]);

    if (mode == SmoteMode::Fold) {
      SmoteResult balanced = smote(fd.x_train, fd.y_train, smote_k,
                                   derive_seed(seed, "cv-smote", f));
      fd.x_train = std::move(balanced.x);
      fd.y_train = std::move(balanced.y);
    }
  }
  return folds;
}

}  // namespace

CvResult grid_search(const std::vector<Hyperparams>& grid, const Matrix& x_raw,
                     const std::vector<int>& y, std::size_t n_classes,
                     const FoldPlan& fold_plan, SmoteMode smote_mode, int smote_k,
                     std::uint64_t seed, int n_threads) {
  if (grid.empty()) throw ConfigError("grid search over an empty grid");
  if (fold_plan.k < 2 || fold_plan.folds.size() != fold_plan.k)
    throw FatalError("grid search needs a complete fold plan");

  const std::vector<FoldData> folds =
      build_folds(x_raw, y, fold_plan, smote_mode, smote_k, seed);

  CvResult result;
  result.family = family_of(grid.front());
  result.smote_mode = smote_mode;
  result.k = fold_plan.k;
  result.seed = seed;
  result.combos.resize(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    result.combos[c].params = grid[c];
    result.combos[c].fold_accuracies.assign(fold_plan.k, 0.0);
  }

  const std::size_t n_tasks = grid.size() * fold_plan.k;
  parallel_for(n_tasks, n_threads, [&](std::size_t task) {
    const std::size_t combo = task / fold_plan.k;
    const std::size_t f = task % fold_plan.k;
    const FoldData& fd = folds[f];
    // Trees inside a task stay sequential; parallelism lives at task level.
    FittedModel model = fit_family(grid[combo], fd.x_train, fd.y_train, n_classes,
                                   derive_seed(seed, "cv-fit", task), 1);
    const std::vector<int> pred = predict_family(model, fd.x_val);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
      if (pred[i] == fd.y_val[i]) ++hits;
    result.combos[combo].fold_accuracies[f] =
        fd.y_val.empty() ? 0.0
                         : static_cast<double>(hits) / static_cast<double>(pred.size());
  });

  for (CvCombo& combo : result.combos) {
    double sum = 0.0;
    for (double a : combo.fold_accuracies) sum += a;
    combo.mean_accuracy = sum / static_cast<double>(combo.fold_accuracies.size());
    double ss = 0.0;
    for (double a : combo.fold_accuracies) {
      const double d = a - combo.mean_accuracy;
      ss += d * d;
    }
    combo.std_accuracy = std::sqrt(ss / static_cast<double>(combo.fold_accuracies.size()));
  }
  result.best_index = 0;
  for (std::size_t c = 1; c < result.combos.size(); ++c)
    if (result.combos[c].mean_accuracy > result.combos[result.best_index].mean_accuracy)
      result.best_index = c;
  return result;
}

}  // namespace ais::ml
