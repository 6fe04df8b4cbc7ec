#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "aistrips/matrix.hpp"

namespace ais::ml {

enum class Kernel { Linear, Rbf };
enum class GammaMode { Scale, Auto };

std::optional<Kernel> kernel_from_string(std::string_view s);
std::string_view to_string(Kernel k);
std::optional<GammaMode> gamma_mode_from_string(std::string_view s);
std::string_view to_string(GammaMode g);

struct SvmParams {
  double c = 1.0;
  Kernel kernel = Kernel::Rbf;
  GammaMode gamma = GammaMode::Scale;
  double tol = 1e-3;
  int max_passes = 10000;
};

// Raw output of the two-variable SMO solver on a +/-1 problem.
struct SmoResult {
  std::vector<double> alpha;
  double bias = 0.0;
  bool converged = true;
  double kkt_violation = 0.0;
  int passes = 0;
};

// Platt-style sequential minimal optimization with deterministic working-set
// choice: second multiplier by max |E1 - E2| over non-bound points, then
// ascending sweeps (no RNG). f(x) = sum alpha_i y_i K(x_i, x) + b.
SmoResult smo_solve(const Matrix& x, const std::vector<double>& y_pm1, double c,
                    Kernel kernel, double gamma, double tol, int max_passes);

struct BinarySvm {
  Matrix support_vectors;
  std::vector<double> dual_coef;  // alpha_i * y_i per support vector
  double bias = 0.0;
  bool converged = true;
  double kkt_violation = 0.0;
};

struct SvmModel {
  SvmParams params;
  double gamma_value = 0.0;  // resolved gamma; ignored by the linear kernel
  std::size_t n_classes = 0;
  std::vector<BinarySvm> machines;  // one-vs-rest, machine c treats class c as +1
};

// gamma resolution: scale = 1 / (d * mean per-feature population variance of
// x), auto = 1 / d. Features are expected standardized (so scale ~ auto).
double resolve_gamma(const Matrix& x, GammaMode mode);

// Fit K one-vs-rest machines. Non-convergence logs a warning with the final
// KKT violation and keeps the model.
SvmModel svm_fit(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
                 const SvmParams& params);

// Per-class decision values (n x K).
Matrix svm_decision(const SvmModel& model, const Matrix& x);

// Argmax of decision values, lowest class index on ties.
std::vector<int> svm_predict(const SvmModel& model, const Matrix& x);

}  // namespace ais::ml
