#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "aistrips/dataset.hpp"
#include "aistrips/ml/grid.hpp"
#include "aistrips/ml/metrics.hpp"
#include "aistrips/model.hpp"

namespace ais {

// Versioned JSON documents for every non-CSV artifact. Each carries a
// "schema" tag ("aistrips.<kind>/v1"); loading anything with a different tag
// is fatal with both tags in the message.

nlohmann::ordered_json model_to_json(const ml::TrainedModel& model);
ml::TrainedModel model_from_json(const nlohmann::json& j);
void save_model(const ml::TrainedModel& model, const std::string& path);
ml::TrainedModel load_model(const std::string& path);

// Run metadata carried alongside an EvalReport so reports can be compared
// later without the model file.
struct EvalMeta {
  std::string model_name;        // family tag, e.g. "rf"
  bool tuned = false;            // grid-searched params vs. defaults
  SmoteMode smote = SmoteMode::Off;
  std::size_t n_rows = 0;
};

nlohmann::ordered_json eval_to_json(const ml::EvalReport& report,
                                    const std::vector<std::string>& class_names,
                                    const EvalMeta& meta);
void save_eval(const ml::EvalReport& report, const std::vector<std::string>& class_names,
               const EvalMeta& meta, const std::string& path);

nlohmann::ordered_json cv_to_json(const ml::CvResult& cv);
void save_cv(const ml::CvResult& cv, const std::string& path);
ml::CvResult load_cv(const std::string& path);

nlohmann::ordered_json split_to_json(const SplitPlan& plan);
// Restores the MMSI assignment (row indices are not persisted; they are
// recomputed against whatever feature table the plan is applied to).
SplitPlan split_from_json(const nlohmann::json& j);
void save_split(const SplitPlan& plan, const std::string& path);
SplitPlan load_split(const std::string& path);

nlohmann::json load_json_checked(const std::string& path, std::string_view schema);

}  // namespace ais
