#include "aistrips/ml/forest.hpp"

#include <cmath>
#include <numeric>

#include "aistrips/common.hpp"
#include "aistrips/parallel.hpp"

namespace ais::ml {

RfModel rf_fit(const Matrix& x, const std::vector<int>& y, const RfParams& params,
               std::size_t n_classes, std::uint64_t seed, int n_threads) {
  if (params.n_estimators < 1) throw ConfigError("rf_fit: n_estimators must be >= 1");
  if (x.rows == 0) throw FatalError("rf_fit: empty training set");

  RfModel model;
  model.params = params;
  model.seed = seed;
  model.n_classes = n_classes;
  model.trees.resize(static_cast<std::size_t>(params.n_estimators));

  std::size_t max_features;
  if (params.max_features < 0)
    max_features = static_cast<std::size_t>(
        std::floor(std::sqrt(static_cast<double>(x.cols))));
  else
    max_features = static_cast<std::size_t>(params.max_features);
  if (max_features < 1) max_features = 1;

  const DtParams tree_params{params.max_depth, params.min_samples_split,
                             params.min_samples_leaf};

  parallel_for(model.trees.size(), n_threads, [&](std::size_t t) {
    Rng rng(derive_seed(seed, "rf-tree", t));
    std::vector<std::size_t> rows(x.rows);
    if (params.bootstrap) {
      for (std::size_t i = 0; i < x.rows; ++i)
        rows[i] = static_cast<std::size_t>(rng.below(x.rows));
    } else {
      std::iota(rows.begin(), rows.end(), 0);
    }
    model.trees[t] =
        dt_fit_on_sample(x, y, tree_params, n_classes, rows, max_features, &rng);
  });
  return model;
}

Matrix rf_vote_fractions(const RfModel& model, const Matrix& x) {
  Matrix votes(x.rows, model.n_classes);
  for (const DtModel& tree : model.trees) {
    for (std::size_t r = 0; r < x.rows; ++r) {
      const int c = dt_predict_one(tree, x.row(r));
      votes(r, static_cast<std::size_t>(c)) += 1.0;
    }
  }
  const double n_trees = static_cast<double>(model.trees.size());
  for (double& v : votes.data) v /= n_trees;
  return votes;
}

std::vector<int> rf_predict(const RfModel& model, const Matrix& x) {
  const Matrix votes = rf_vote_fractions(model, x);
  std::vector<int> out(x.rows);
  for (std::size_t r = 0; r < x.rows; ++r) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < votes.cols; ++c)
      if (votes(r, c) > votes(r, best)) best = c;
    out[r] = static_cast<int>(best);
  }
  return out;
}

}  // namespace ais::ml
