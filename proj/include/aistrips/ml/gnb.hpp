#pragma once

#include <cstddef>
#include <vector>

#include "aistrips/matrix.hpp"

namespace ais::ml {

// Gaussian naive Bayes. Class-conditional variances get a floor of
// var_smoothing * max-feature-variance added, so constant features stay
// usable.
struct GnbModel {
  std::size_t n_classes = 0;
  std::size_t n_features = 0;
  std::vector<double> log_prior;  // -inf for classes absent from the fit
  Matrix mean;                    // n_classes x n_features
  Matrix var;
  double epsilon = 0.0;
};

GnbModel gnb_fit(const Matrix& x, const std::vector<int>& y,
                 std::size_t n_classes, double var_smoothing = 1e-9);

// Unnormalized class log-posteriors (log prior + log likelihood), n x K.
Matrix gnb_log_joint(const GnbModel& model, const Matrix& x);

// Argmax of the log-joint; ties go to the lowest class index.
std::vector<int> gnb_predict(const GnbModel& model, const Matrix& x);

}  // namespace ais::ml
