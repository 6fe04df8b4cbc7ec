#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aistrips/matrix.hpp"

namespace ais::ml {

// K x K counts, rows = true class, columns = predicted class.
struct ConfusionMatrix {
  std::size_t k = 0;
  std::vector<std::int64_t> counts;

  explicit ConfusionMatrix(std::size_t k_ = 0) : k(k_), counts(k_ * k_, 0) {}
  std::int64_t& at(std::size_t truth, std::size_t pred) { return counts[truth * k + pred]; }
  std::int64_t at(std::size_t truth, std::size_t pred) const { return counts[truth * k + pred]; }
  std::int64_t total() const;
  std::int64_t trace() const;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;
  bool flagged = false;  // some denominator was zero and got reported as 0
};

struct EvalReport {
  double accuracy = 0.0;
  std::vector<ClassMetrics> per_class;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  ConfusionMatrix confusion;
  std::optional<double> auc_macro;
  std::vector<std::optional<double>> auc_per_class;  // nullopt = class skipped
};

// Confusion + per-class precision/recall/F1 with zero denominators reported
// as 0 and flagged; macro metrics are unweighted means over all K classes.
EvalReport evaluate(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                    std::size_t n_classes);

// Normalized Mann-Whitney U with half credit for score ties. nullopt when
// either side is empty.
std::optional<double> roc_auc_binary(const std::vector<double>& scores,
                                     const std::vector<bool>& is_positive);

// One-vs-rest macro AUC over per-class score columns; classes absent from
// the truth are skipped (nullopt in per_class). Returns nullopt when no class
// is scoreable.
std::optional<double> roc_auc_ovr(const Matrix& scores, const std::vector<int>& y_true,
                                  std::vector<std::optional<double>>* per_class = nullptr);

}  // namespace ais::ml
