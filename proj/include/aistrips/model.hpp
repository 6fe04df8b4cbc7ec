#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "aistrips/dataset.hpp"
#include "aistrips/ml/forest.hpp"
#include "aistrips/ml/gnb.hpp"
#include "aistrips/ml/svm.hpp"
#include "aistrips/ml/tree.hpp"

namespace ais::ml {

enum class Family { Gnb, Svm, Dt, Rf };

std::optional<Family> family_from_string(std::string_view s);
std::string_view to_string(Family f);

struct GnbParams {
  double var_smoothing = 1e-9;
};

using Hyperparams = std::variant<GnbParams, SvmParams, DtParams, RfParams>;
Family family_of(const Hyperparams& params);
Hyperparams default_params(Family family);

using FittedModel = std::variant<GnbModel, SvmModel, DtModel, RfModel>;

// Uniform fit/predict/score over the four families. Scores are the families'
// native class scores: GNB log-joint, SVM decision values, DT leaf
// frequencies, RF vote fractions.
FittedModel fit_family(const Hyperparams& params, const Matrix& x,
                       const std::vector<int>& y, std::size_t n_classes,
                       std::uint64_t seed, int n_threads = 1);
std::vector<int> predict_family(const FittedModel& model, const Matrix& x);
Matrix scores_family(const FittedModel& model, const Matrix& x);

// A deployable classifier: fitted parameters plus everything needed to turn
// raw feature rows into model inputs (scaler, codecs, feature schema).
struct TrainedModel {
  Family family = Family::Rf;
  Hyperparams params;
  FittedModel fitted;
  Standardizer scaler;
  LabelCodec ship_codec;
  LabelCodec cargo_codec;
  LabelCodec mobile_codec;
  std::vector<std::string> feature_names;
  std::uint64_t seed = 0;
  SmoteMode smote_mode = SmoteMode::Fold;
  int smote_k = 5;
  bool tuned = false;  // params came from a grid search rather than defaults

  std::vector<int> predict(const Matrix& x_raw) const;
  Matrix scores(const Matrix& x_raw) const;
};

// Standardize on the training rows, optionally SMOTE the standardized
// training set (any mode other than off), fit. The smote fold/paper
// distinction only matters inside cross-validation; the final fit treats
// both as "balance the training set".
TrainedModel train_model(const Hyperparams& params, const Matrix& x_train_raw,
                         const std::vector<int>& y_train, const LabelCodec& ship,
                         const LabelCodec& cargo, const LabelCodec& mobile,
                         const std::vector<std::string>& feature_names,
                         std::uint64_t seed, SmoteMode smote_mode, int smote_k,
                         int n_threads = 1);

}  // namespace ais::ml
