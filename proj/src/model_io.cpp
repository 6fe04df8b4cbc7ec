#include "aistrips/model_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "aistrips/common.hpp"

namespace ais {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace ml;

namespace {

constexpr std::string_view kModelSchema = "aistrips.model/v1";
constexpr std::string_view kEvalSchema = "aistrips.eval/v1";
constexpr std::string_view kCvSchema = "aistrips.cv/v1";
constexpr std::string_view kSplitSchema = "aistrips.split/v1";

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t expect_cols) {
  Matrix m(j.size(), j.empty() ? expect_cols : j.front().size());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  return m;
}

// -inf (absent class prior) is not representable in JSON; null stands in.
ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double finite_from(const json& j) {
  if (j.is_null()) return -std::numeric_limits<double>::infinity();
  return j.get<double>();
}

ordered_json params_to_json(const Hyperparams& params) {
  ordered_json j;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GnbParams>) {
          j["var_smoothing"] = p.var_smoothing;
        } else if constexpr (std::is_same_v<T, SvmParams>) {
          j["c"] = p.c;
          j["kernel"] = std::string(to_string(p.kernel));
          j["gamma"] = std::string(to_string(p.gamma));
          j["tol"] = p.tol;
          j["max_passes"] = p.max_passes;
        } else if constexpr (std::is_same_v<T, DtParams>) {
          j["max_depth"] = p.max_depth;
          j["min_samples_split"] = p.min_samples_split;
          j["min_samples_leaf"] = p.min_samples_leaf;
        } else {
          j["n_estimators"] = p.n_estimators;
          j["max_depth"] = p.max_depth;
          j["min_samples_split"] = p.min_samples_split;
          j["min_samples_leaf"] = p.min_samples_leaf;
          j["bootstrap"] = p.bootstrap;
          j["max_features"] = p.max_features;
        }
      },
      params);
  return j;
}

Hyperparams params_from_json(Family family, const json& j) {
  switch (family) {
    case Family::Gnb: {
      GnbParams p;
      p.var_smoothing = j.value("var_smoothing", p.var_smoothing);
      return p;
    }
    case Family::Svm: {
      SvmParams p;
      p.c = j.at("c").get<double>();
      auto k = kernel_from_string(j.at("kernel").get<std::string>());
      auto g = gamma_mode_from_string(j.at("gamma").get<std::string>());
      if (!k || !g) throw FatalError("model file: unknown SVM kernel/gamma");
      p.kernel = *k;
      p.gamma = *g;
      p.tol = j.value("tol", p.tol);
      p.max_passes = j.value("max_passes", p.max_passes);
      return p;
    }
    case Family::Dt: {
      DtParams p;
      p.max_depth = j.at("max_depth").get<int>();
      p.min_samples_split = j.at("min_samples_split").get<int>();
      p.min_samples_leaf = j.at("min_samples_leaf").get<int>();
      return p;
    }
    case Family::Rf: {
      RfParams p;
      p.n_estimators = j.at("n_estimators").get<int>();
      p.max_depth = j.at("max_depth").get<int>();
      p.min_samples_split = j.at("min_samples_split").get<int>();
      p.min_samples_leaf = j.at("min_samples_leaf").get<int>();
      p.bootstrap = j.at("bootstrap").get<bool>();
      p.max_features = j.at("max_features").get<int>();
      return p;
    }
  }
  throw FatalError("model file: unknown family");
}

ordered_json tree_to_json(const DtModel& tree) {
  ordered_json nodes = ordered_json::array();
  for (const TreeNode& n : tree.nodes) {
    ordered_json jn;
    jn["feature"] = n.feature;
    jn["threshold"] = n.threshold;
    jn["left"] = n.left;
    jn["right"] = n.right;
    jn["counts"] = n.counts;
    jn["impurity"] = n.impurity;
    jn["n"] = n.n_samples;
    nodes.push_back(std::move(jn));
  }
  return nodes;
}

std::vector<TreeNode> tree_nodes_from_json(const json& j) {
  std::vector<TreeNode> nodes;
  nodes.reserve(j.size());
  for (const auto& jn : j) {
    TreeNode n;
    n.feature = jn.at("feature").get<int>();
    n.threshold = jn.at("threshold").get<double>();
    n.left = jn.at("left").get<std::int32_t>();
    n.right = jn.at("right").get<std::int32_t>();
    n.counts = jn.at("counts").get<std::vector<double>>();
    n.impurity = jn.at("impurity").get<double>();
    n.n_samples = jn.at("n").get<std::size_t>();
    nodes.push_back(std::move(n));
  }
  return nodes;
}

ordered_json fitted_to_json(const FittedModel& fitted) {
  ordered_json j;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GnbModel>) {
          j["n_classes"] = m.n_classes;
          j["n_features"] = m.n_features;
          ordered_json priors = ordered_json::array();
          for (double lp : m.log_prior) priors.push_back(finite_or_null(lp));
          j["log_prior"] = std::move(priors);
          j["mean"] = matrix_to_json(m.mean);
          j["var"] = matrix_to_json(m.var);
          j["epsilon"] = m.epsilon;
        } else if constexpr (std::is_same_v<T, SvmModel>) {
          j["n_classes"] = m.n_classes;
          j["gamma_value"] = m.gamma_value;
          ordered_json machines = ordered_json::array();
          for (const BinarySvm& b : m.machines) {
            ordered_json jb;
            jb["support_vectors"] = matrix_to_json(b.support_vectors);
            jb["dual_coef"] = b.dual_coef;
            jb["bias"] = b.bias;
            jb["converged"] = b.converged;
            jb["kkt_violation"] = b.kkt_violation;
            machines.push_back(std::move(jb));
          }
          j["machines"] = std::move(machines);
        } else if constexpr (std::is_same_v<T, DtModel>) {
          j["n_classes"] = m.n_classes;
          j["nodes"] = tree_to_json(m);
        } else {
          j["n_classes"] = m.n_classes;
          j["seed"] = m.seed;
          ordered_json trees = ordered_json::array();
          for (const DtModel& t : m.trees) trees.push_back(tree_to_json(t));
          j["trees"] = std::move(trees);
        }
      },
      fitted);
  return j;
}

FittedModel fitted_from_json(Family family, const Hyperparams& params, const json& j) {
  switch (family) {
    case Family::Gnb: {
      GnbModel m;
      m.n_classes = j.at("n_classes").get<std::size_t>();
      m.n_features = j.at("n_features").get<std::size_t>();
      for (const auto& lp : j.at("log_prior")) m.log_prior.push_back(finite_from(lp));
      m.mean = matrix_from_json(j.at("mean"), m.n_features);
      m.var = matrix_from_json(j.at("var"), m.n_features);
      m.epsilon = j.at("epsilon").get<double>();
      return m;
    }
    case Family::Svm: {
      SvmModel m;
      m.params = std::get<SvmParams>(params);
      m.n_classes = j.at("n_classes").get<std::size_t>();
      m.gamma_value = j.at("gamma_value").get<double>();
      for (const auto& jb : j.at("machines")) {
        BinarySvm b;
        b.support_vectors = matrix_from_json(jb.at("support_vectors"), 0);
        b.dual_coef = jb.at("dual_coef").get<std::vector<double>>();
        b.bias = jb.at("bias").get<double>();
        b.converged = jb.at("converged").get<bool>();
        b.kkt_violation = jb.at("kkt_violation").get<double>();
        m.machines.push_back(std::move(b));
      }
      return m;
    }
    case Family::Dt: {
      DtModel m;
      m.params = std::get<DtParams>(params);
      m.n_classes = j.at("n_classes").get<std::size_t>();
      m.nodes = tree_nodes_from_json(j.at("nodes"));
      return m;
    }
    case Family::Rf: {
      RfModel m;
      m.params = std::get<RfParams>(params);
      m.n_classes = j.at("n_classes").get<std::size_t>();
      m.seed = j.at("seed").get<std::uint64_t>();
      const DtParams tree_params{m.params.max_depth, m.params.min_samples_split,
                                 m.params.min_samples_leaf};
      for (const auto& jt : j.at("trees")) {
        DtModel t;
        t.params = tree_params;
        t.n_classes = m.n_classes;
        t.nodes = tree_nodes_from_json(jt);
        m.trees.push_back(std::move(t));
      }
      return m;
    }
  }
  throw FatalError("model file: unknown family");
}

void check_schema(const json& j, std::string_view expected) {
  const std::string found = j.value("schema", std::string("<missing>"));
  if (found != expected)
    throw FatalError("schema mismatch: found '" + found + "', expected '" +
                     std::string(expected) + "'");
}

void write_json_file(const ordered_json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FatalError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw FatalError("write failed: " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FatalError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FatalError(path + ": " + e.what());
  }
  return j;
}

}  // namespace

nlohmann::json load_json_checked(const std::string& path, std::string_view schema) {
  json j = read_json_file(path);
  check_schema(j, schema);
  return j;
}

ordered_json model_to_json(const TrainedModel& model) {
  ordered_json j;
  j["schema"] = kModelSchema;
  j["family"] = std::string(to_string(model.family));
  j["seed"] = model.seed;
  j["smote"] = std::string(to_string(model.smote_mode));
  j["smote_k"] = model.smote_k;
  j["tuned"] = model.tuned;
  j["params"] = params_to_json(model.params);
  j["feature_names"] = model.feature_names;
  j["labels"]["ship"] = model.ship_codec.classes;
  j["labels"]["cargo"] = model.cargo_codec.classes;
  j["labels"]["mobile"] = model.mobile_codec.classes;
  j["scaler"]["mean"] = model.scaler.mean;
  j["scaler"]["std"] = model.scaler.stddev;
  j["fitted"] = fitted_to_json(model.fitted);
  return j;
}

TrainedModel model_from_json(const json& j) {
  check_schema(j, kModelSchema);
  TrainedModel m;
  auto fam = family_from_string(j.at("family").get<std::string>());
  if (!fam) throw FatalError("model file: unknown family tag");
  m.family = *fam;
  m.seed = j.at("seed").get<std::uint64_t>();
  auto smote = smote_mode_from_string(j.at("smote").get<std::string>());
  if (!smote) throw FatalError("model file: unknown smote mode");
  m.smote_mode = *smote;
  m.smote_k = j.at("smote_k").get<int>();
  m.tuned = j.value("tuned", false);
  m.params = params_from_json(m.family, j.at("params"));
  m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
  m.ship_codec.classes = j.at("labels").at("ship").get<std::vector<std::string>>();
  m.cargo_codec.classes = j.at("labels").at("cargo").get<std::vector<std::string>>();
  m.mobile_codec.classes = j.at("labels").at("mobile").get<std::vector<std::string>>();
  m.scaler.mean = j.at("scaler").at("mean").get<std::vector<double>>();
  m.scaler.stddev = j.at("scaler").at("std").get<std::vector<double>>();
  m.fitted = fitted_from_json(m.family, m.params, j.at("fitted"));
  return m;
}

void save_model(const TrainedModel& model, const std::string& path) {
  write_json_file(model_to_json(model), path);
}

TrainedModel load_model(const std::string& path) {
  return model_from_json(read_json_file(path));
}

ordered_json eval_to_json(const EvalReport& report,
                          const std::vector<std::string>& class_names,
                          const EvalMeta& meta) {
  ordered_json j;
  j["schema"] = kEvalSchema;
  j["model"] = meta.model_name;
  j["tuned"] = meta.tuned;
  j["smote"] = std::string(to_string(meta.smote));
  j["n"] = meta.n_rows;
  j["accuracy"] = report.accuracy;
  j["macro"]["precision"] = report.macro_precision;
  j["macro"]["recall"] = report.macro_recall;
  j["macro"]["f1"] = report.macro_f1;
  j["auc_macro"] = report.auc_macro ? ordered_json(*report.auc_macro) : ordered_json(nullptr);
  ordered_json per = ordered_json::array();
  for (std::size_t c = 0; c < report.per_class.size(); ++c) {
    const ClassMetrics& cm = report.per_class[c];
    ordered_json jc;
    jc["label"] = c < class_names.size() ? class_names[c] : std::to_string(c);
    jc["precision"] = cm.precision;
    jc["recall"] = cm.recall;
    jc["f1"] = cm.f1;
    jc["support"] = cm.support;
    jc["flagged"] = cm.flagged;
    if (c < report.auc_per_class.size() && report.auc_per_class[c])
      jc["auc"] = *report.auc_per_class[c];
    else
      jc["auc"] = nullptr;
    per.push_back(std::move(jc));
  }
  j["per_class"] = std::move(per);
  ordered_json confusion = ordered_json::array();
  for (std::size_t t = 0; t < report.confusion.k; ++t) {
    ordered_json row = ordered_json::array();
    for (std::size_t p = 0; p < report.confusion.k; ++p)
      row.push_back(report.confusion.at(t, p));
    confusion.push_back(std::move(row));
  }
  j["confusion"] = std::move(confusion);
  return j;
}

void save_eval(const EvalReport& report, const std::vector<std::string>& class_names,
               const EvalMeta& meta, const std::string& path) {
  write_json_file(eval_to_json(report, class_names, meta), path);
}

ordered_json cv_to_json(const CvResult& cv) {
  ordered_json j;
  j["schema"] = kCvSchema;
  j["family"] = std::string(to_string(cv.family));
  j["smote"] = std::string(to_string(cv.smote_mode));
  j["k"] = cv.k;
  j["seed"] = cv.seed;
  j["best_index"] = cv.best_index;
  ordered_json combos = ordered_json::array();
  for (const CvCombo& c : cv.combos) {
    ordered_json jc;
    jc["params"] = params_to_json(c.params);
    jc["fold_accuracies"] = c.fold_accuracies;
    jc["mean_accuracy"] = c.mean_accuracy;
    jc["std_accuracy"] = c.std_accuracy;
    combos.push_back(std::move(jc));
  }
  j["combos"] = std::move(combos);
  return j;
}

void save_cv(const CvResult& cv, const std::string& path) {
  write_json_file(cv_to_json(cv), path);
}

CvResult load_cv(const std::string& path) {
  json j = load_json_checked(path, kCvSchema);
  CvResult cv;
  auto fam = family_from_string(j.at("family").get<std::string>());
  if (!fam) throw FatalError("cv file: unknown family tag");
  cv.family = *fam;
  auto smote = smote_mode_from_string(j.at("smote").get<std::string>());
  if (!smote) throw FatalError("cv file: unknown smote mode");
  cv.smote_mode = *smote;
  cv.k = j.at("k").get<std::size_t>();
  cv.seed = j.at("seed").get<std::uint64_t>();
  cv.best_index = j.at("best_index").get<std::size_t>();
  for (const auto& jc : j.at("combos")) {
    CvCombo c;
    c.params = params_from_json(cv.family, jc.at("params"));
    c.fold_accuracies = jc.at("fold_accuracies").get<std::vector<double>>();
    c.mean_accuracy = jc.at("mean_accuracy").get<double>();
    c.std_accuracy = jc.at("std_accuracy").get<double>();
    cv.combos.push_back(std::move(c));
  }
  return cv;
}

ordered_json split_to_json(const SplitPlan& plan) {
  ordered_json j;
  j["schema"] = kSplitSchema;
  j["test_fraction"] = plan.test_fraction;
  j["seed"] = plan.seed;
  j["train_mmsi"] = plan.train_mmsi;
  j["test_mmsi"] = plan.test_mmsi;
  // Row indices against the feature table the plan was built from. Stages
  // that apply the plan re-derive membership from the MMSI sets, so the plan
  // stays valid if the table is regenerated with identical content.
  j["train_indices"] = plan.train_indices;
  j["test_indices"] = plan.test_indices;
  return j;
}

SplitPlan split_from_json(const json& j) {
  check_schema(j, kSplitSchema);
  SplitPlan plan;
  plan.test_fraction = j.at("test_fraction").get<double>();
  plan.seed = j.at("seed").get<std::uint64_t>();
  plan.train_mmsi = j.at("train_mmsi").get<std::vector<std::int64_t>>();
  plan.test_mmsi = j.at("test_mmsi").get<std::vector<std::int64_t>>();
  if (j.contains("train_indices"))
    plan.train_indices = j.at("train_indices").get<std::vector<std::size_t>>();
  if (j.contains("test_indices"))
    plan.test_indices = j.at("test_indices").get<std::vector<std::size_t>>();
  return plan;
}

void save_split(const SplitPlan& plan, const std::string& path) {
  write_json_file(split_to_json(plan), path);
}

SplitPlan load_split(const std::string& path) {
  return split_from_json(read_json_file(path));
}

}  // namespace ais
