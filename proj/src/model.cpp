#include "aistrips/model.hpp"

#include "aistrips/common.hpp"
#include "aistrips/rng.hpp"

namespace ais::ml {

std::optional<Family> family_from_string(std::string_view s) {
  if (s == "gnb") return Family::Gnb;
  if (s == "svm") return Family::Svm;
  if (s == "dt") return Family::Dt;
  if (s == "rf") return Family::Rf;
  return std::nullopt;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Gnb: return "gnb";
    case Family::Svm: return "svm";
    case Family::Dt: return "dt";
    case Family::Rf: return "rf";
  }
  return "rf";
}

Family family_of(const Hyperparams& params) {
  switch (params.index()) {
    case 0: return Family::Gnb;
    case 1: return Family::Svm;
    case 2: return Family::Dt;
    default: return Family::Rf;
  }
}

Hyperparams default_params(Family family) {
  switch (family) {
    case Family::Gnb: return GnbParams{};
    case Family::Svm: return SvmParams{};
    case Family::Dt: return DtParams{};
    case Family::Rf: return RfParams{};
  }
  return RfParams{};
}

FittedModel fit_family(const Hyperparams& params, const Matrix& x,
                       const std::vector<int>& y, std::size_t n_classes,
                       std::uint64_t seed, int n_threads) {
  return std::visit(
      [&](const auto& p) -> FittedModel {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GnbParams>)
          return gnb_fit(x, y, n_classes, p.var_smoothing);
        else if constexpr (std::is_same_v<T, SvmParams>)
          return svm_fit(x, y, n_classes, p);
        else if constexpr (std::is_same_v<T, DtParams>)
          return dt_fit(x, y, p, n_classes);
        else
          return rf_fit(x, y, p, n_classes, seed, n_threads);
      },
      params);
}

std::vector<int> predict_family(const FittedModel& model, const Matrix& x) {
  return std::visit(
      [&](const auto& m) -> std::vector<int> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GnbModel>)
          return gnb_predict(m, x);
        else if constexpr (std::is_same_v<T, SvmModel>)
          return svm_predict(m, x);
        else if constexpr (std::is_same_v<T, DtModel>)
          return dt_predict(m, x);
        else
          return rf_predict(m, x);
      },
      model);
}

Matrix scores_family(const FittedModel& model, const Matrix& x) {
  return std::visit(
      [&](const auto& m) -> Matrix {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GnbModel>)
          return gnb_log_joint(m, x);
        else if constexpr (std::is_same_v<T, SvmModel>)
          return svm_decision(m, x);
        else if constexpr (std::is_same_v<T, DtModel>)
          return dt_leaf_frequencies(m, x);
        else
          return rf_vote_fractions(m, x);
      },
      model);
}

std::vector<int> TrainedModel::predict(const Matrix& x_raw) const {
  return predict_family(fitted, scaler.transform(x_raw));
}

Matrix TrainedModel::scores(const Matrix& x_raw) const {
  return scores_family(fitted, scaler.transform(x_raw));
}

TrainedModel train_model(const Hyperparams& params, const Matrix& x_train_raw,
                         const std::vector<int>& y_train, const LabelCodec& ship,
                         const LabelCodec& cargo, const LabelCodec& mobile,
                         const std::vector<std::string>& feature_names,
                         std::uint64_t seed, SmoteMode smote_mode, int smote_k,
                         int n_threads) {
  if (x_train_raw.rows == 0) throw FatalError("train_model: empty training set");

  TrainedModel model;
  model.family = family_of(params);
  model.params = params;
  model.scaler = Standardizer::fit(x_train_raw);
  model.ship_codec = ship;
  model.cargo_codec = cargo;
  model.mobile_codec = mobile;
  model.feature_names = feature_names;
  model.seed = seed;
  model.smote_mode = smote_mode;
  model.smote_k = smote_k;

  Matrix x = model.scaler.transform(x_train_raw);
  std::vector<int> y = y_train;
  if (smote_mode != SmoteMode::Off) {
    SmoteResult balanced = smote(x, y, smote_k, derive_seed(seed, "smote"));
    x = std::move(balanced.x);
    y = std::move(balanced.y);
  }
  model.fitted =
      fit_family(params, x, y, ship.size(), derive_seed(seed, "fit"), n_threads);
  return model;
}

}  // namespace ais::ml
