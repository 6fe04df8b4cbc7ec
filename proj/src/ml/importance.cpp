#include "aistrips/ml/importance.hpp"

#include <cmath>

#include "aistrips/common.hpp"
#include "aistrips/parallel.hpp"
#include "aistrips/rng.hpp"

namespace ais::ml {

namespace {

void accumulate_tree(const DtModel& tree, std::vector<double>& acc) {
  for (const TreeNode& node : tree.nodes) {
    if (node.feature < 0) continue;
    const TreeNode& l = tree.nodes[node.left];
    const TreeNode& r = tree.nodes[node.right];
    const double drop = static_cast<double>(node.n_samples) * node.impurity -
                        static_cast<double>(l.n_samples) * l.impurity -
                        static_cast<double>(r.n_samples) * r.impurity;
    acc[static_cast<std::size_t>(node.feature)] += drop;
  }
}

void normalize(std::vector<double>& acc) {
  double total = 0.0;
  for (double v : acc) total += v;
  if (total > 0.0)
    for (double& v : acc) v /= total;
}

}  // namespace

std::vector<double> gini_importance(const DtModel& tree, std::size_t n_features) {
  std::vector<double> acc(n_features, 0.0);
  accumulate_tree(tree, acc);
  normalize(acc);
  return acc;
}

std::vector<double> gini_importance(const RfModel& forest, std::size_t n_features) {
  std::vector<double> acc(n_features, 0.0);
  for (const DtModel& tree : forest.trees) accumulate_tree(tree, acc);
  normalize(acc);
  return acc;
}

PermutationReport permutation_importance(
    const std::function<std::vector<int>(const Matrix&)>& predict, const Matrix& x,
    const std::vector<int>& y, std::uint64_t seed, int n_repeats, int n_threads) {
  if (x.rows != y.size()) throw FatalError("permutation importance: x/y length mismatch");
  if (x.rows == 0) throw FatalError("permutation importance on empty data");

  const auto accuracy = [&](const std::vector<int>& pred) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
      if (pred[i] == y[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(pred.size());
  };

  PermutationReport report;
  report.baseline_accuracy = accuracy(predict(x));
  report.mean_drop.assign(x.cols, 0.0);
  report.std_drop.assign(x.cols, 0.0);

  const std::size_t reps = static_cast<std::size_t>(n_repeats);
  std::vector<double> drops(x.cols * reps, 0.0);
  parallel_for(x.cols * reps, n_threads, [&](std::size_t task) {
    const std::size_t f = task / reps;
    const std::size_t r = task % reps;
    Rng rng(derive_seed(seed, "perm", f * reps + r));
    std::vector<std::size_t> order(x.rows);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    Matrix shuffled = x;
    for (std::size_t i = 0; i < x.rows; ++i) shuffled(i, f) = x(order[i], f);
    drops[task] = report.baseline_accuracy - accuracy(predict(shuffled));
  });

  for (std::size_t f = 0; f < x.cols; ++f) {
    double sum = 0.0;
    for (std::size_t r = 0; r < reps; ++r) sum += drops[f * reps + r];
    const double mean = sum / static_cast<double>(reps);
    double ss = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      const double d = drops[f * reps + r] - mean;
      ss += d * d;
    }
    report.mean_drop[f] = mean;
    report.std_drop[f] = std::sqrt(ss / static_cast<double>(reps));
  }
  return report;
}

}  // namespace ais::ml
