#include "aistrips/ml/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aistrips/common.hpp"

namespace ais::ml {

namespace {

struct Builder {
  const Matrix& x;
  const std::vector<int>& y;
  const DtParams& params;
  std::size_t n_classes;
  std::size_t max_features;  // 0 or >= d means all
  Rng* rng;
  DtModel* model;

  // Reused scratch per split search.
  std::vector<std::pair<double, int>> sorted;
  std::vector<double> left_counts;

  double gini_of(const std::vector<double>& counts, double n) const {
    if (n <= 0.0) return 0.0;
    double ss = 0.0;
    for (double c : counts) ss += c * c;
    return 1.0 - ss / (n * n);
  }

  // Candidate features for this node, ascending so Gini ties resolve to the
  // lowest feature index.
  std::vector<std::size_t> candidate_features() {
    const std::size_t d = x.cols;
    if (max_features == 0 || max_features >= d || rng == nullptr) {
      std::vector<std::size_t> all(d);
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
    // Partial Fisher-Yates draw of max_features distinct indices.
    std::vector<std::size_t> pool(d);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::size_t> picked;
    picked.reserve(max_features);
    for (std::size_t i = 0; i < max_features; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng->below(d - i));
      std::swap(pool[i], pool[j]);
      picked.push_back(pool[i]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  struct Split {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double metric = 0.0;  // sum over children of n_child * gini_child
  };

  // Exhaustive best split over the candidate features. The minimized metric
  // is sum_child n_c * (1 - sum_k (count_k/n_c)^2) = n_c - ss_c/n_c, updated
  // incrementally as samples move left.
  Split best_split(const std::vector<std::size_t>& rows,
                   const std::vector<double>& node_counts) {
    const double n = static_cast<double>(rows.size());
    const double parent_metric = n * gini_of(node_counts, n);
    const double min_leaf = static_cast<double>(params.min_samples_leaf);

    Split best;
    for (std::size_t f : candidate_features()) {
      sorted.clear();
      for (std::size_t r : rows) sorted.emplace_back(x(r, f), y[r]);
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (sorted.front().first == sorted.back().first) continue;

      left_counts.assign(n_classes, 0.0);
      double ss_left = 0.0;
      double ss_right = 0.0;
      for (double c : node_counts) ss_right += c * c;
      std::vector<double> right_counts = node_counts;

      for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const auto cls = static_cast<std::size_t>(sorted[i].second);
        ss_left += 2.0 * left_counts[cls] + 1.0;
        left_counts[cls] += 1.0;
        ss_right -= 2.0 * right_counts[cls] - 1.0;
        right_counts[cls] -= 1.0;

        if (sorted[i].first == sorted[i + 1].first) continue;
        const double n_left = static_cast<double>(i + 1);
        const double n_right = n - n_left;
        if (n_left < min_leaf || n_right < min_leaf) continue;

        const double metric = (n_left - ss_left / n_left) + (n_right - ss_right / n_right);
        if (!best.found || metric < best.metric) {
          best.found = true;
          best.feature = f;
          best.threshold = (sorted[i].first + sorted[i + 1].first) / 2.0;
          best.metric = metric;
        }
      }
    }
    // Demand a strict impurity decrease.
    if (best.found && !(best.metric < parent_metric - 1e-12)) best.found = false;
    return best;
  }

  std::int32_t build(std::vector<std::size_t> rows, int depth) {
    const auto node_id = static_cast<std::int32_t>(model->nodes.size());
    model->nodes.emplace_back();
    {
      TreeNode& node = model->nodes.back();
      node.counts.assign(n_classes, 0.0);
      for (std::size_t r : rows) node.counts[static_cast<std::size_t>(y[r])] += 1.0;
      node.n_samples = rows.size();
      node.impurity = gini_of(node.counts, static_cast<double>(rows.size()));
    }

    const bool pure = model->nodes[node_id].impurity <= 0.0;
    const bool depth_capped = params.max_depth > 0 && depth >= params.max_depth;
    const bool too_small =
        rows.size() < static_cast<std::size_t>(params.min_samples_split);
    if (pure || depth_capped || too_small) return node_id;

    Split split = best_split(rows, model->nodes[node_id].counts);
    if (!split.found) return node_id;

    std::vector<std::size_t> left_rows, right_rows;
    left_rows.reserve(rows.size());
    right_rows.reserve(rows.size());
    for (std::size_t r : rows) {
      (x(r, split.feature) <= split.threshold ? left_rows : right_rows).push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    model->nodes[node_id].feature = static_cast<int>(split.feature);
    model->nodes[node_id].threshold = split.threshold;
    const std::int32_t left = build(std::move(left_rows), depth + 1);
    model->nodes[node_id].left = left;
    const std::int32_t right = build(std::move(right_rows), depth + 1);
    model->nodes[node_id].right = right;
    return node_id;
  }
};

}  // namespace

DtModel dt_fit_on_sample(const Matrix& x, const std::vector<int>& y,
                         const DtParams& params, std::size_t n_classes,
                         const std::vector<std::size_t>& sample_rows,
                         std::size_t max_features, Rng* rng) {
  if (sample_rows.empty()) throw FatalError("dt_fit: empty training set");
  DtModel model;
  model.n_classes = n_classes;
  model.params = params;
  Builder b{x, y, params, n_classes, max_features, rng, &model, {}, {}};
  b.build(sample_rows, 0);
  return model;
}

DtModel dt_fit(const Matrix& x, const std::vector<int>& y, const DtParams& params,
               std::size_t n_classes) {
  std::vector<std::size_t> all(x.rows);
  std::iota(all.begin(), all.end(), 0);
  return dt_fit_on_sample(x, y, params, n_classes, all, 0, nullptr);
}

namespace {
const TreeNode& leaf_for(const DtModel& model, std::span<const double> row) {
  std::int32_t id = 0;
  for (;;) {
    const TreeNode& node = model.nodes[static_cast<std::size_t>(id)];
    if (node.feature < 0) return node;
    id = row[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left
                                                                       : node.right;
  }
}
}  // namespace

int dt_predict_one(const DtModel& model, std::span<const double> row) {
  const TreeNode& leaf = leaf_for(model, row);
  std::size_t best = 0;
  for (std::size_t c = 1; c < leaf.counts.size(); ++c)
    if (leaf.counts[c] > leaf.counts[best]) best = c;
  return static_cast<int>(best);
}

std::vector<int> dt_predict(const DtModel& model, const Matrix& x) {
  std::vector<int> out(x.rows);
  for (std::size_t r = 0; r < x.rows; ++r) out[r] = dt_predict_one(model, x.row(r));
  return out;
}

Matrix dt_leaf_frequencies(const DtModel& model, const Matrix& x) {
  Matrix out(x.rows, model.n_classes);
  for (std::size_t r = 0; r < x.rows; ++r) {
    const TreeNode& leaf = leaf_for(model, x.row(r));
    const double n = static_cast<double>(leaf.n_samples);
    for (std::size_t c = 0; c < model.n_classes; ++c)
      out(r, c) = n > 0.0 ? leaf.counts[c] / n : 0.0;
  }
  return out;
}

}  // namespace ais::ml
