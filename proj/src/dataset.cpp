#include "aistrips/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "aistrips/common.hpp"
#include "aistrips/rng.hpp"

namespace ais {

LabelCodec LabelCodec::fit(std::vector<std::string> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return LabelCodec{std::move(values)};
}

const LabelCodec& LabelCodec::ship_types() {
  static const LabelCodec codec{{"Cargo", "Fishing", "HSC", "Passenger", "Tanker"}};
  return codec;
}

int LabelCodec::encode(std::string_view name) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), name);
  if (it == classes.end() || *it != name) return -1;
  return static_cast<int>(it - classes.begin());
}

const std::string& LabelCodec::decode(std::size_t code) const {
  if (code >= classes.size())
    throw FatalError("label code " + std::to_string(code) + " out of range");
  return classes[code];
}

Standardizer Standardizer::fit(const Matrix& x) {
  Standardizer s;
  s.mean.assign(x.cols, 0.0);
  s.stddev.assign(x.cols, 0.0);
  if (x.rows == 0) return s;
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t c = 0; c < x.cols; ++c) s.mean[c] += x(r, c);
  for (double& m : s.mean) m /= static_cast<double>(x.rows);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t c = 0; c < x.cols; ++c) {
      const double d = x(r, c) - s.mean[c];
      s.stddev[c] += d * d;
    }
  for (double& v : s.stddev) v = std::sqrt(v / static_cast<double>(x.rows));
  return s;
}

Matrix Standardizer::transform(const Matrix& x) const {
  Matrix z(x.rows, x.cols);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t c = 0; c < x.cols; ++c)
      z(r, c) = stddev[c] > 0.0 ? (x(r, c) - mean[c]) / stddev[c] : 0.0;
  return z;
}

Matrix Standardizer::inverse(const Matrix& z) const {
  Matrix x(z.rows, z.cols);
  for (std::size_t r = 0; r < z.rows; ++r)
    for (std::size_t c = 0; c < z.cols; ++c)
      x(r, c) = z(r, c) * stddev[c] + mean[c];
  return x;
}

std::optional<SmoteMode> smote_mode_from_string(std::string_view s) {
  if (s == "off") return SmoteMode::Off;
  if (s == "fold") return SmoteMode::Fold;
  if (s == "paper") return SmoteMode::Paper;
  return std::nullopt;
}

std::string_view to_string(SmoteMode m) {
  switch (m) {
    case SmoteMode::Off: return "off";
    case SmoteMode::Fold: return "fold";
    case SmoteMode::Paper: return "paper";
  }
  return "off";
}

PreparedDataset prepare(const std::vector<FeatureRow>& rows) {
  PreparedDataset ds;
  ds.ship_codec = LabelCodec::ship_types();
  ds.feature_names.assign(model_feature_names().begin(), model_feature_names().end());

  struct Candidate {
    const FeatureRow* row;
    std::array<double, kModelFeatureCount> slots;
    int label;
  };
  std::vector<Candidate> kept;
  kept.reserve(rows.size());

  for (const FeatureRow& row : rows) {
    const int label = row.ship_type ? ds.ship_codec.encode(*row.ship_type) : -1;
    if (label < 0) {
      ++ds.dropped_unknown_class;
      continue;
    }
    auto slots = numeric_feature_slots(row);
    bool missing = !row.cargo_type || row.mobile_type == MobileType::Unknown;
    for (std::size_t i = 0; i < slots.size() && !missing; ++i) {
      if (i == kCargoFeatureIndex || i == kMobileFeatureIndex) continue;
      if (std::isnan(slots[i])) missing = true;
    }
    if (missing) {
      ++ds.dropped_missing;
      continue;
    }
    kept.push_back({&row, slots, label});
  }
  if (kept.empty()) throw FatalError("dataset preparation left no usable rows");

  std::vector<std::string> cargo_values, mobile_values;
  cargo_values.reserve(kept.size());
  for (const Candidate& c : kept) {
    cargo_values.push_back(*c.row->cargo_type);
    mobile_values.push_back(std::string(to_string(c.row->mobile_type)));
  }
  ds.cargo_codec = LabelCodec::fit(std::move(cargo_values));
  ds.mobile_codec = LabelCodec::fit(std::move(mobile_values));

  ds.x = Matrix(kept.size(), kModelFeatureCount);
  ds.y.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Candidate& c = kept[i];
    c.slots[kCargoFeatureIndex] =
        static_cast<double>(ds.cargo_codec.encode(*c.row->cargo_type));
    c.slots[kMobileFeatureIndex] =
        static_cast<double>(ds.mobile_codec.encode(to_string(c.row->mobile_type)));
    std::copy(c.slots.begin(), c.slots.end(), ds.x.row(i).begin());
    ds.y.push_back(c.label);
    ds.mmsi.push_back(c.row->mmsi);
    ds.trip_id.push_back(c.row->trip_id);
  }
  return ds;
}

Matrix feature_matrix_for_predict(const std::vector<FeatureRow>& rows,
                                  const LabelCodec& cargo_codec,
                                  const LabelCodec& mobile_codec,
                                  std::vector<std::size_t>& kept_rows) {
  kept_rows.clear();
  std::vector<std::array<double, kModelFeatureCount>> slots_kept;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto slots = numeric_feature_slots(rows[r]);
    bool missing = false;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (i == kCargoFeatureIndex || i == kMobileFeatureIndex) continue;
      if (std::isnan(slots[i])) missing = true;
    }
    if (missing) continue;
    slots[kCargoFeatureIndex] = static_cast<double>(
        rows[r].cargo_type ? cargo_codec.encode(*rows[r].cargo_type) : -1);
    slots[kMobileFeatureIndex] = static_cast<double>(
        mobile_codec.encode(to_string(rows[r].mobile_type)));
    kept_rows.push_back(r);
    slots_kept.push_back(slots);
  }
  Matrix x(slots_kept.size(), kModelFeatureCount);
  for (std::size_t i = 0; i < slots_kept.size(); ++i)
    std::copy(slots_kept[i].begin(), slots_kept[i].end(), x.row(i).begin());
  return x;
}

SplitPlan grouped_split(const std::vector<std::int64_t>& row_mmsi,
                        double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw ConfigError("test fraction must lie in (0, 1)");
  if (row_mmsi.empty()) throw FatalError("grouped split on empty dataset");

  std::map<std::int64_t, std::size_t> counts;
  for (std::int64_t m : row_mmsi) ++counts[m];

  const std::size_t total = row_mmsi.size();
  const double train_cap = (1.0 - test_fraction) * static_cast<double>(total);
  for (const auto& [m, c] : counts) {
    if (static_cast<double>(c) > train_cap)
      throw FatalError("MMSI " + std::to_string(m) + " owns " + std::to_string(c) +
                       " of " + std::to_string(total) +
                       " rows; no split at this fraction can hold it");
  }

  std::vector<std::int64_t> mmsis;
  mmsis.reserve(counts.size());
  for (const auto& [m, c] : counts) mmsis.push_back(m);
  Rng rng(derive_seed(seed, "split"));
  rng.shuffle(mmsis);

  const std::size_t target = static_cast<std::size_t>(
      std::ceil(test_fraction * static_cast<double>(total) - 1e-9));
  SplitPlan plan;
  plan.test_fraction = test_fraction;
  plan.seed = seed;
  std::size_t test_rows = 0;
  std::size_t i = 0;
  for (; i < mmsis.size() && test_rows < target; ++i) {
    plan.test_mmsi.push_back(mmsis[i]);
    test_rows += counts[mmsis[i]];
  }
  for (; i < mmsis.size(); ++i) plan.train_mmsi.push_back(mmsis[i]);
  std::sort(plan.test_mmsi.begin(), plan.test_mmsi.end());
  std::sort(plan.train_mmsi.begin(), plan.train_mmsi.end());

  for (std::size_t r = 0; r < row_mmsi.size(); ++r) {
    const bool in_test = std::binary_search(plan.test_mmsi.begin(),
                                            plan.test_mmsi.end(), row_mmsi[r]);
    (in_test ? plan.test_indices : plan.train_indices).push_back(r);
  }
  return plan;
}

FoldPlan stratified_kfold(const std::vector<int>& labels, std::size_t k,
                          std::uint64_t seed,
                          const std::vector<std::string>* class_names) {
  if (k < 2) throw ConfigError("k-fold needs k >= 2");
  if (labels.empty()) throw FatalError("k-fold on empty label set");

  int max_label = 0;
  for (int y : labels) max_label = std::max(max_label, y);
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(max_label) + 1);
  for (std::size_t i = 0; i < labels.size(); ++i)
    by_class[static_cast<std::size_t>(labels[i])].push_back(i);

  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (!by_class[c].empty() && by_class[c].size() < k) {
      std::string name = class_names && c < class_names->size()
                             ? (*class_names)[c]
                             : "class " + std::to_string(c);
      throw FatalError(name + " has " + std::to_string(by_class[c].size()) +
                       " rows, fewer than k=" + std::to_string(k));
    }
  }

  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.folds.assign(k, {});
  Rng rng(derive_seed(seed, "kfold"));
  for (auto& members : by_class) {
    rng.shuffle(members);
    for (std::size_t i = 0; i < members.size(); ++i)
      plan.folds[i % k].push_back(members[i]);
  }
  for (auto& fold : plan.folds) std::sort(fold.begin(), fold.end());
  return plan;
}

SmoteResult smote(const Matrix& x, const std::vector<int>& y, int k_neighbors,
                  std::uint64_t seed) {
  if (k_neighbors < 1) throw ConfigError("smote needs k >= 1");

  int max_label = 0;
  for (int v : y) max_label = std::max(max_label, v);
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(max_label) + 1);
  for (std::size_t i = 0; i < y.size(); ++i)
    by_class[static_cast<std::size_t>(y[i])].push_back(i);

  std::size_t majority = 0;
  for (const auto& m : by_class) majority = std::max(majority, m.size());

  SmoteResult out;
  out.y = y;
  out.synthetic.assign(y.size(), false);
  std::vector<std::vector<double>> extra_rows;
  std::vector<int> extra_y;

  for (std::size_t c = 0; c < by_class.size(); ++c) {
    const auto& members = by_class[c];
    if (members.empty() || members.size() >= majority) continue;
    if (members.size() == 1)
      throw FatalError("smote: class " + std::to_string(c) +
                       " has a single member, cannot interpolate");

    const std::size_t m = members.size();
    const std::size_t k_eff = std::min<std::size_t>(static_cast<std::size_t>(k_neighbors), m - 1);

    // k nearest same-class neighbours per member; ties by lower row index.
    std::vector<std::vector<std::size_t>> nn(m);
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<std::pair<double, std::size_t>> dist;
      dist.reserve(m - 1);
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        double d2 = 0.0;
        auto ra = x.row(members[a]);
        auto rb = x.row(members[b]);
        for (std::size_t f = 0; f < x.cols; ++f) {
          const double d = ra[f] - rb[f];
          d2 += d * d;
        }
        dist.emplace_back(d2, members[b]);
      }
      std::sort(dist.begin(), dist.end());
      nn[a].reserve(k_eff);
      for (std::size_t t = 0; t < k_eff; ++t) nn[a].push_back(dist[t].second);
    }

    Rng rng(derive_seed(seed, "smote", c));
    for (std::size_t need = majority - m; need > 0; --need) {
      const std::size_t a = static_cast<std::size_t>(rng.below(m));
      const std::size_t nb = nn[a][static_cast<std::size_t>(rng.below(k_eff))];
      const double u = rng.uniform();
      std::vector<double> row(x.cols);
      auto ra = x.row(members[a]);
      auto rb = x.row(nb);
      for (std::size_t f = 0; f < x.cols; ++f) row[f] = ra[f] + u * (rb[f] - ra[f]);
      extra_rows.push_back(std::move(row));
      extra_y.push_back(static_cast<int>(c));
    }
  }

  out.x = Matrix(x.rows + extra_rows.size(), x.cols);
  std::copy(x.data.begin(), x.data.end(), out.x.data.begin());
  for (std::size_t i = 0; i < extra_rows.size(); ++i) {
    std::copy(extra_rows[i].begin(), extra_rows[i].end(),
              out.x.row(x.rows + i).begin());
    out.y.push_back(extra_y[i]);
    out.synthetic.push_back(true);
  }
  return out;
}

}  // namespace ais
