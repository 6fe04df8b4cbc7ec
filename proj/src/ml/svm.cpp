#include "aistrips/ml/svm.hpp"

#include <cmath>
#include <string>

#include "aistrips/common.hpp"
#include "aistrips/log.hpp"

namespace ais::ml {

std::optional<Kernel> kernel_from_string(std::string_view s) {
  if (s == "linear") return Kernel::Linear;
  if (s == "rbf") return Kernel::Rbf;
  return std::nullopt;
}

std::string_view to_string(Kernel k) {
  return k == Kernel::Linear ? "linear" : "rbf";
}

std::optional<GammaMode> gamma_mode_from_string(std::string_view s) {
  if (s == "scale") return GammaMode::Scale;
  if (s == "auto") return GammaMode::Auto;
  return std::nullopt;
}

std::string_view to_string(GammaMode g) {
  return g == GammaMode::Scale ? "scale" : "auto";
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sq_dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double kernel_value(Kernel kernel, double gamma, std::span<const double> a,
                    std::span<const double> b) {
  if (kernel == Kernel::Linear) return dot(a, b);
  return std::exp(-gamma * sq_dist(a, b));
}

// Gram rows are precomputed for problems small enough to afford n^2 doubles.
constexpr std::size_t kGramLimit = 4000;

struct Smo {
  const Matrix& x;
  const std::vector<double>& y;
  double c;
  Kernel kernel;
  double gamma;
  double tol;
  int max_passes;

  std::size_t n;
  std::vector<double> alpha;
  std::vector<double> f;  // current decision value per training point
  double b = 0.0;
  Matrix gram;  // n x n when cached, else empty
  std::vector<double> row_i1, row_i2;

  explicit Smo(const Matrix& x_, const std::vector<double>& y_, double c_,
               Kernel kernel_, double gamma_, double tol_, int max_passes_)
      : x(x_), y(y_), c(c_), kernel(kernel_), gamma(gamma_), tol(tol_),
        max_passes(max_passes_), n(x_.rows), alpha(n, 0.0), f(n, 0.0) {
    if (n <= kGramLimit) {
      gram = Matrix(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        gram(i, i) = kernel_value(kernel, gamma, x.row(i), x.row(i));
        for (std::size_t j = i + 1; j < n; ++j) {
          const double v = kernel_value(kernel, gamma, x.row(i), x.row(j));
          gram(i, j) = v;
          gram(j, i) = v;
        }
      }
    }
  }

  double k(std::size_t i, std::size_t j) const {
    if (gram.rows > 0) return gram(i, j);
    return kernel_value(kernel, gamma, x.row(i), x.row(j));
  }

  // Kernel column against every training point, for the f updates.
  void kernel_column(std::size_t i, std::vector<double>& out) const {
    out.resize(n);
    if (gram.rows > 0) {
      auto r = gram.row(i);
      std::copy(r.begin(), r.end(), out.begin());
      return;
    }
    for (std::size_t j = 0; j < n; ++j)
      out[j] = kernel_value(kernel, gamma, x.row(i), x.row(j));
  }

  bool non_bound(std::size_t i) const { return alpha[i] > 0.0 && alpha[i] < c; }

  bool take_step(std::size_t i1, std::size_t i2) {
    if (i1 == i2) return false;
    const double a1_old = alpha[i1];
    const double a2_old = alpha[i2];
    const double y1 = y[i1];
    const double y2 = y[i2];
    const double e1 = f[i1] - y1;
    const double e2 = f[i2] - y2;
    const double s = y1 * y2;

    double lo, hi;
    if (y1 != y2) {
      lo = std::max(0.0, a2_old - a1_old);
      hi = std::min(c, c + a2_old - a1_old);
    } else {
      lo = std::max(0.0, a1_old + a2_old - c);
      hi = std::min(c, a1_old + a2_old);
    }
    if (lo >= hi) return false;

    const double k11 = k(i1, i1);
    const double k12 = k(i1, i2);
    const double k22 = k(i2, i2);
    const double eta = k11 + k22 - 2.0 * k12;

    double a2;
    if (eta > 0.0) {
      a2 = a2_old + y2 * (e1 - e2) / eta;
      a2 = std::clamp(a2, lo, hi);
    } else {
      // Flat direction: evaluate the objective at both clip ends.
      const double f1 = y1 * (e1 + b) - a1_old * k11 - s * a2_old * k12;
      const double f2 = y2 * (e2 + b) - s * a1_old * k12 - a2_old * k22;
      const double l1 = a1_old + s * (a2_old - lo);
      const double h1 = a1_old + s * (a2_old - hi);
      const double obj_lo = l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11 +
                            0.5 * lo * lo * k22 + s * lo * l1 * k12;
      const double obj_hi = h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11 +
                            0.5 * hi * hi * k22 + s * hi * h1 * k12;
      if (obj_lo < obj_hi - 1e-12)
        a2 = lo;
      else if (obj_lo > obj_hi + 1e-12)
        a2 = hi;
      else
        return false;
    }
    if (std::abs(a2 - a2_old) < 1e-10 * (a2 + a2_old + 1e-10)) return false;

    const double a1 = a1_old + s * (a2_old - a2);
    const double d1 = y1 * (a1 - a1_old);
    const double d2 = y2 * (a2 - a2_old);

    const double b1 = b - e1 - d1 * k11 - d2 * k12;
    const double b2 = b - e2 - d1 * k12 - d2 * k22;
    double b_new;
    if (a1 > 0.0 && a1 < c)
      b_new = b1;
    else if (a2 > 0.0 && a2 < c)
      b_new = b2;
    else
      b_new = (b1 + b2) / 2.0;

    kernel_column(i1, row_i1);
    kernel_column(i2, row_i2);
    const double db = b_new - b;
    for (std::size_t j = 0; j < n; ++j)
      f[j] += d1 * row_i1[j] + d2 * row_i2[j] + db;

    alpha[i1] = a1;
    alpha[i2] = a2;
    b = b_new;
    return true;
  }

  int examine(std::size_t i2) {
    const double y2 = y[i2];
    const double e2 = f[i2] - y2;
    const double r2 = e2 * y2;
    if (!((r2 < -tol && alpha[i2] < c) || (r2 > tol && alpha[i2] > 0.0))) return 0;

    // Second-choice heuristic: the non-bound point maximizing |e1 - e2|.
    std::size_t best = n;
    double best_gap = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!non_bound(i)) continue;
      const double gap = std::abs((f[i] - y[i]) - e2);
      if (gap > best_gap) {
        best_gap = gap;
        best = i;
      }
    }
    if (best < n && take_step(best, i2)) return 1;
    for (std::size_t i = 0; i < n; ++i)
      if (non_bound(i) && take_step(i, i2)) return 1;
    for (std::size_t i = 0; i < n; ++i)
      if (take_step(i, i2)) return 1;
    return 0;
  }

  SmoResult run() {
    int passes = 0;
    bool examine_all = true;
    int changed = 0;
    while ((changed > 0 || examine_all) && passes < max_passes) {
      changed = 0;
      if (examine_all) {
        for (std::size_t i = 0; i < n; ++i) changed += examine(i);
      } else {
        for (std::size_t i = 0; i < n; ++i)
          if (non_bound(i)) changed += examine(i);
      }
      ++passes;
      if (examine_all)
        examine_all = false;
      else if (changed == 0)
        examine_all = true;
    }

    SmoResult res;
    res.alpha = alpha;
    res.bias = b;
    res.passes = passes;
    res.converged = passes < max_passes;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double margin = y[i] * f[i];  // y_i f(x_i)
      double v = 0.0;
      if (alpha[i] <= 0.0)
        v = std::max(0.0, 1.0 - margin);
      else if (alpha[i] >= c)
        v = std::max(0.0, margin - 1.0);
      else
        v = std::abs(margin - 1.0);
      worst = std::max(worst, v);
    }
    res.kkt_violation = worst;
    return res;
  }
};

}  // namespace

SmoResult smo_solve(const Matrix& x, const std::vector<double>& y_pm1, double c,
                    Kernel kernel, double gamma, double tol, int max_passes) {
  if (x.rows == 0 || x.rows != y_pm1.size())
    throw FatalError("smo_solve: empty or mismatched training data");
  Smo solver(x, y_pm1, c, kernel, gamma, tol, max_passes);
  return solver.run();
}

double resolve_gamma(const Matrix& x, GammaMode mode) {
  const double d = static_cast<double>(x.cols);
  if (mode == GammaMode::Auto) return 1.0 / d;
  // mean per-feature population variance
  double total_var = 0.0;
  for (std::size_t f = 0; f < x.cols; ++f) {
    double mean = 0.0;
    for (std::size_t r = 0; r < x.rows; ++r) mean += x(r, f);
    mean /= static_cast<double>(x.rows);
    double v = 0.0;
    for (std::size_t r = 0; r < x.rows; ++r) {
      const double delta = x(r, f) - mean;
      v += delta * delta;
    }
    total_var += v / static_cast<double>(x.rows);
  }
  const double mean_var = total_var / d;
  if (mean_var <= 0.0) return 1.0 / d;
  return 1.0 / (d * mean_var);
}

SvmModel svm_fit(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
                 const SvmParams& params) {
  if (n_classes < 2) throw FatalError("svm_fit: need at least 2 classes");
  if (x.rows == 0 || x.rows != y.size())
    throw FatalError("svm_fit: empty or mismatched training data");

  SvmModel model;
  model.params = params;
  model.n_classes = n_classes;
  model.gamma_value = resolve_gamma(x, params.gamma);

  std::vector<double> y_pm(x.rows);
  for (std::size_t cls = 0; cls < n_classes; ++cls) {
    for (std::size_t i = 0; i < x.rows; ++i)
      y_pm[i] = y[i] == static_cast<int>(cls) ? 1.0 : -1.0;
    SmoResult res = smo_solve(x, y_pm, params.c, params.kernel, model.gamma_value,
                              params.tol, params.max_passes);
    if (!res.converged)
      log_msg(LogLevel::Warn,
              "svm machine for class " + std::to_string(cls) +
                  " hit the pass cap; final KKT violation " +
                  std::to_string(res.kkt_violation));

    BinarySvm machine;
    machine.bias = res.bias;
    machine.converged = res.converged;
    machine.kkt_violation = res.kkt_violation;
    std::vector<std::size_t> sv;
    for (std::size_t i = 0; i < x.rows; ++i)
      if (res.alpha[i] > 0.0) sv.push_back(i);
    machine.support_vectors = x.take(sv);
    machine.dual_coef.reserve(sv.size());
    for (std::size_t i : sv) machine.dual_coef.push_back(res.alpha[i] * y_pm[i]);
    model.machines.push_back(std::move(machine));
  }
  return model;
}

Matrix svm_decision(const SvmModel& model, const Matrix& x) {
  Matrix out(x.rows, model.n_classes);
  for (std::size_t cls = 0; cls < model.machines.size(); ++cls) {
    const BinarySvm& m = model.machines[cls];
    for (std::size_t r = 0; r < x.rows; ++r) {
      double v = m.bias;
      for (std::size_t s = 0; s < m.support_vectors.rows; ++s)
        v += m.dual_coef[s] * kernel_value(model.params.kernel, model.gamma_value,
                                           m.support_vectors.row(s), x.row(r));
      out(r, cls) = v;
    }
  }
  return out;
}

std::vector<int> svm_predict(const SvmModel& model, const Matrix& x) {
  const Matrix dec = svm_decision(model, x);
  std::vector<int> labels(x.rows);
  for (std::size_t r = 0; r < x.rows; ++r) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < dec.cols; ++c)
      if (dec(r, c) > dec(r, best)) best = c;
    labels[r] = static_cast<int>(best);
  }
  return labels;
}

}  // namespace ais::ml
