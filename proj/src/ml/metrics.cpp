#include "aistrips/ml/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "aistrips/common.hpp"

namespace ais::ml {

std::int64_t ConfusionMatrix::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t ConfusionMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < k; ++i) t += at(i, i);
  return t;
}

EvalReport evaluate(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                    std::size_t n_classes) {
  if (y_true.size() != y_pred.size())
    throw FatalError("evaluate: label vectors differ in length");

  EvalReport rep;
  rep.confusion = ConfusionMatrix(n_classes);
  for (std::size_t i = 0; i < y_true.size(); ++i)
    ++rep.confusion.at(static_cast<std::size_t>(y_true[i]),
                       static_cast<std::size_t>(y_pred[i]));

  const std::int64_t total = rep.confusion.total();
  rep.accuracy = total > 0 ? static_cast<double>(rep.confusion.trace()) /
                                 static_cast<double>(total)
                           : 0.0;

  rep.per_class.resize(n_classes);
  for (std::size_t c = 0; c < n_classes; ++c) {
    std::int64_t tp = rep.confusion.at(c, c);
    std::int64_t fp = 0, fn = 0;
    for (std::size_t o = 0; o < n_classes; ++o) {
      if (o == c) continue;
      fp += rep.confusion.at(o, c);
      fn += rep.confusion.at(c, o);
    }
    ClassMetrics& m = rep.per_class[c];
    m.support = tp + fn;
    if (tp + fp > 0)
      m.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    else
      m.flagged = true;
    if (tp + fn > 0)
      m.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    else
      m.flagged = true;
    if (m.precision + m.recall > 0.0)
      m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    else
      m.flagged = true;

    rep.macro_precision += m.precision;
    rep.macro_recall += m.recall;
    rep.macro_f1 += m.f1;
  }
  if (n_classes > 0) {
    rep.macro_precision /= static_cast<double>(n_classes);
    rep.macro_recall /= static_cast<double>(n_classes);
    rep.macro_f1 /= static_cast<double>(n_classes);
  }
  return rep;
}

std::optional<double> roc_auc_binary(const std::vector<double>& scores,
                                     const std::vector<bool>& is_positive) {
  if (scores.size() != is_positive.size())
    throw FatalError("roc_auc_binary: mismatched inputs");
  std::size_t n_pos = 0;
  for (bool p : is_positive) n_pos += p ? 1 : 0;
  const std::size_t n_neg = scores.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) return std::nullopt;

  // Average ranks over ties, then AUC = (R_pos - n_pos(n_pos+1)/2)/(n_pos n_neg).
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t)
      if (is_positive[order[t]]) rank_sum_pos += avg_rank;
    i = j + 1;
  }
  const double np = static_cast<double>(n_pos);
  const double nn = static_cast<double>(n_neg);
  return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

std::optional<double> roc_auc_ovr(const Matrix& scores, const std::vector<int>& y_true,
                                  std::vector<std::optional<double>>* per_class) {
  if (scores.rows != y_true.size())
    throw FatalError("roc_auc_ovr: scores and labels differ in length");

  std::vector<std::optional<double>> aucs(scores.cols);
  double sum = 0.0;
  std::size_t counted = 0;
  std::vector<double> col(scores.rows);
  std::vector<bool> pos(scores.rows);
  for (std::size_t c = 0; c < scores.cols; ++c) {
    for (std::size_t r = 0; r < scores.rows; ++r) {
      col[r] = scores(r, c);
      pos[r] = y_true[r] == static_cast<int>(c);
    }
    aucs[c] = roc_auc_binary(col, pos);
    if (aucs[c]) {
      sum += *aucs[c];
      ++counted;
    }
  }
  if (per_class) *per_class = std::move(aucs);
  if (counted == 0) return std::nullopt;
  return sum / static_cast<double>(counted);
}

}  // namespace ais::ml
