#include "aistrips/ml/gnb.hpp"

#include <cmath>
#include <limits>

#include "aistrips/common.hpp"

namespace ais::ml {

namespace {
constexpr double kLog2Pi = 1.837877066409345483560659472811235279723;
}

GnbModel gnb_fit(const Matrix& x, const std::vector<int>& y,
                 std::size_t n_classes, double var_smoothing) {
  if (x.rows == 0 || x.rows != y.size())
    throw FatalError("gnb_fit: empty or mismatched training data");

  GnbModel m;
  m.n_classes = n_classes;
  m.n_features = x.cols;
  m.mean = Matrix(n_classes, x.cols);
  m.var = Matrix(n_classes, x.cols);
  m.log_prior.assign(n_classes, -std::numeric_limits<double>::infinity());

  std::vector<std::size_t> count(n_classes, 0);
  for (std::size_t r = 0; r < x.rows; ++r) {
    const auto c = static_cast<std::size_t>(y[r]);
    ++count[c];
    for (std::size_t f = 0; f < x.cols; ++f) m.mean(c, f) += x(r, f);
  }
  for (std::size_t c = 0; c < n_classes; ++c)
    if (count[c] > 0)
      for (std::size_t f = 0; f < x.cols; ++f)
        m.mean(c, f) /= static_cast<double>(count[c]);
  for (std::size_t r = 0; r < x.rows; ++r) {
    const auto c = static_cast<std::size_t>(y[r]);
    for (std::size_t f = 0; f < x.cols; ++f) {
      const double d = x(r, f) - m.mean(c, f);
      m.var(c, f) += d * d;
    }
  }
  for (std::size_t c = 0; c < n_classes; ++c)
    if (count[c] > 0)
      for (std::size_t f = 0; f < x.cols; ++f)
        m.var(c, f) /= static_cast<double>(count[c]);

  // Floor: var_smoothing times the largest global feature variance.
  std::vector<double> gmean(x.cols, 0.0);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t f = 0; f < x.cols; ++f) gmean[f] += x(r, f);
  for (double& v : gmean) v /= static_cast<double>(x.rows);
  double max_var = 0.0;
  for (std::size_t f = 0; f < x.cols; ++f) {
    double v = 0.0;
    for (std::size_t r = 0; r < x.rows; ++r) {
      const double d = x(r, f) - gmean[f];
      v += d * d;
    }
    max_var = std::max(max_var, v / static_cast<double>(x.rows));
  }
  m.epsilon = var_smoothing * max_var;
  if (m.epsilon <= 0.0) m.epsilon = var_smoothing;  // all-constant fallback
  for (std::size_t c = 0; c < n_classes; ++c)
    for (std::size_t f = 0; f < x.cols; ++f) m.var(c, f) += m.epsilon;

  for (std::size_t c = 0; c < n_classes; ++c)
    if (count[c] > 0)
      m.log_prior[c] = std::log(static_cast<double>(count[c]) /
                                static_cast<double>(x.rows));
  return m;
}

Matrix gnb_log_joint(const GnbModel& model, const Matrix& x) {
  Matrix out(x.rows, model.n_classes);
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < model.n_classes; ++c) {
      double ll = model.log_prior[c];
      if (std::isfinite(ll)) {
        for (std::size_t f = 0; f < model.n_features; ++f) {
          const double v = model.var(c, f);
          const double d = x(r, f) - model.mean(c, f);
          ll += -0.5 * (kLog2Pi + std::log(v)) - d * d / (2.0 * v);
        }
      }
      out(r, c) = ll;
    }
  }
  return out;
}

std::vector<int> gnb_predict(const GnbModel& model, const Matrix& x) {
  const Matrix joint = gnb_log_joint(model, x);
  std::vector<int> labels(x.rows, 0);
  for (std::size_t r = 0; r < joint.rows; ++r) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < joint.cols; ++c)
      if (joint(r, c) > joint(r, best)) best = c;
    labels[r] = static_cast<int>(best);
  }
  return labels;
}

}  // namespace ais::ml
