#include "newsdesk/classifiers/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::classifiers {

namespace {

constexpr int kModelFormatVersion = 1;

void check_shape(const FeatureVector& x, std::size_t dimension) {
  if (x.extent() > dimension) {
    throw ShapeError("feature index " + std::to_string(x.extent() - 1) +
                     " outside feature space of dimension " + std::to_string(dimension));
  }
}

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Box-Muller over mt19937_64 so initial weights are identical on every
// standard library.
double gaussian(std::mt19937_64& rng) {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * kScale;
  const double u2 = static_cast<double>(rng() >> 11) * kScale;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::vector<double> softmax(std::span<const double> scores) {
  std::vector<double> p(scores.begin(), scores.end());
  if (p.empty()) return p;
  const double mx = *std::max_element(p.begin(), p.end());
  double sum = 0.0;
  for (auto& v : p) {
    v = std::exp(v - mx);
    sum += v;
  }
  constexpr double kFloor = std::numeric_limits<double>::min();
  bool floored = false;
  for (auto& v : p) {
    v /= sum;
    if (v < kFloor) {
      v = kFloor;
      floored = true;
    }
  }
  if (floored) {
    double s = 0.0;
    for (double v : p) s += v;
    for (auto& v : p) v /= s;
  }
  return p;
}

// ------------------------------------------------------------ LinearModel

LinearModel::LinearModel(std::vector<std::string> classes, FeatureSpace space)
    : classes_(std::move(classes)),
      space_(std::move(space)),
      weights_(classes_.size() * space_.dimension, 0.0),
      bias_(classes_.size(), 0.0) {}

std::vector<double> LinearModel::scores(const FeatureVector& x) const {
  if (!fitted()) throw NotFitted("linear model has not been trained");
  check_shape(x, space_.dimension);
  std::vector<double> z(bias_.begin(), bias_.end());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const double* row = weights_.data() + c * space_.dimension;
    double s = 0.0;
    for (const auto& e : x.entries()) s += row[e.index] * e.weight;
    z[c] += s;
  }
  return z;
}

std::vector<double> LinearModel::predict_proba(const FeatureVector& x) const {
  return softmax(scores(x));
}

std::size_t LinearModel::predict(const FeatureVector& x) const {
  const auto z = scores(x);
  return static_cast<std::size_t>(std::max_element(z.begin(), z.end()) - z.begin());
}

std::size_t LinearModel::class_index(const std::string& label) const {
  auto it = std::find(classes_.begin(), classes_.end(), label);
  if (it == classes_.end()) throw NotFound("class '" + label + "' not in model");
  return static_cast<std::size_t>(it - classes_.begin());
}

nlohmann::json LinearModel::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    std::vector<std::size_t> idx;
    std::vector<double> val;
    for (std::size_t j = 0; j < space_.dimension; ++j) {
      const double w = weights_[c * space_.dimension + j];
      if (w != 0.0 || std::signbit(w)) {
        idx.push_back(j);
        val.push_back(w);
      }
    }
    rows.push_back({{"index", idx}, {"value", val}});
  }
  return {{"format", "newsdesk.linear_model"},
          {"version", kModelFormatVersion},
          {"classes", classes_},
          {"feature_space",
           {{"kind", space_.kind}, {"dimension", space_.dimension}, {"descriptor", space_.descriptor}}},
          {"weights", rows},
          {"bias", bias_}};
}

LinearModel LinearModel::from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "newsdesk.linear_model") throw ConfigError("not a linear model file");
  if (j.value("version", 0) != kModelFormatVersion) {
    throw ConfigError("unsupported linear model version " + std::to_string(j.value("version", 0)));
  }
  FeatureSpace space;
  const auto& fs = j.at("feature_space");
  space.kind = fs.at("kind").get<std::string>();
  space.dimension = fs.at("dimension").get<std::size_t>();
  space.descriptor = fs.value("descriptor", nlohmann::json::object());
  LinearModel m(j.at("classes").get<std::vector<std::string>>(), std::move(space));
  const auto& rows = j.at("weights");
  if (rows.size() != m.classes_.size()) throw ShapeError("weight rows do not match classes");
  for (std::size_t c = 0; c < rows.size(); ++c) {
    const auto idx = rows[c].at("index").get<std::vector<std::size_t>>();
    const auto val = rows[c].at("value").get<std::vector<double>>();
    if (idx.size() != val.size()) throw ShapeError("weight row index/value length mismatch");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= m.space_.dimension) throw ShapeError("weight index out of range");
      m.weights_[c * m.space_.dimension + idx[k]] = val[k];
    }
  }
  m.bias_ = j.at("bias").get<std::vector<double>>();
  if (m.bias_.size() != m.classes_.size()) throw ShapeError("bias does not match classes");
  return m;
}

void LinearModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << to_json().dump();
}

LinearModel LinearModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  return from_json(nlohmann::json::parse(in));
}

// ------------------------------------------------------------ objective

MaxentObjective::MaxentObjective(std::span<const Sample> samples, std::size_t num_classes,
                                 std::size_t dimension, double l2)
    : samples_(samples), k_(num_classes), d_(dimension), l2_(l2) {}

double MaxentObjective::value(std::span<const double> params) const {
  const double* w = params.data();
  const double* b = params.data() + k_ * d_;
  std::vector<double> z(k_);
  double loss = 0.0;
  for (const auto& s : samples_) {
    for (std::size_t c = 0; c < k_; ++c) {
      double acc = b[c];
      const double* row = w + c * d_;
      for (const auto& e : s.features.entries()) acc += row[e.index] * e.weight;
      z[c] = acc;
    }
    const double mx = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double v : z) sum += std::exp(v - mx);
    loss += mx + std::log(sum) - z[s.label];
  }
  loss /= static_cast<double>(samples_.size());
  if (l2_ > 0.0) {
    double sq = 0.0;
    for (std::size_t i = 0; i < k_ * d_; ++i) sq += w[i] * w[i];
    loss += 0.5 * l2_ * sq;
  }
  return loss;
}

double MaxentObjective::value_and_gradient(std::span<const double> params,
                                           std::span<double> grad) const {
  std::fill(grad.begin(), grad.end(), 0.0);
  const double* w = params.data();
  const double* b = params.data() + k_ * d_;
  double* gw = grad.data();
  double* gb = grad.data() + k_ * d_;
  std::vector<double> z(k_);
  double loss = 0.0;
  for (const auto& s : samples_) {
    for (std::size_t c = 0; c < k_; ++c) {
      double acc = b[c];
      const double* row = w + c * d_;
      for (const auto& e : s.features.entries()) acc += row[e.index] * e.weight;
      z[c] = acc;
    }
    const double mx = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double v : z) sum += std::exp(v - mx);
    const double lse = mx + std::log(sum);
    loss += lse - z[s.label];
    for (std::size_t c = 0; c < k_; ++c) {
      const double r = std::exp(z[c] - lse) - (c == s.label ? 1.0 : 0.0);
      gb[c] += r;
      double* grow = gw + c * d_;
      for (const auto& e : s.features.entries()) grow[e.index] += r * e.weight;
    }
  }
  const double inv_n = 1.0 / static_cast<double>(samples_.size());
  loss *= inv_n;
  for (auto& g : grad) g *= inv_n;
  if (l2_ > 0.0) {
    double sq = 0.0;
    for (std::size_t i = 0; i < k_ * d_; ++i) {
      sq += w[i] * w[i];
      gw[i] += l2_ * w[i];
    }
    loss += 0.5 * l2_ * sq;
  }
  return loss;
}

// ------------------------------------------------------------ training

LinearModel train_maxent(std::span<const LabeledSample> samples, FeatureSpace space,
                         const TrainConfig& config, std::vector<std::string> classes,
                         TrainingTrace* trace) {
  if (config.l2 < 0.0) throw ConfigError("l2 must be non-negative");
  std::set<std::string> distinct;
  for (const auto& s : samples) distinct.insert(s.label);
  if (distinct.size() < 2) {
    throw DegenerateLabels("training data needs at least two distinct labels, found " +
                           std::to_string(distinct.size()));
  }
  if (classes.empty()) classes.assign(distinct.begin(), distinct.end());

  LinearModel model(classes, space);
  for (const auto& s : samples) check_shape(s.features, space.dimension);

  // From a zero start, weights of features no sample uses have zero gradient
  // and stay zero, so training runs over the used columns only. With a
  // random start they decay under L2 and the full space is kept.
  std::vector<std::uint32_t> used;
  if (config.init_scale <= 0.0) {
    std::vector<bool> seen(space.dimension, false);
    for (const auto& s : samples) {
      for (const auto& e : s.features.entries()) seen[e.index] = true;
    }
    for (std::size_t j = 0; j < seen.size(); ++j) {
      if (seen[j]) used.push_back(static_cast<std::uint32_t>(j));
    }
  }
  const bool compact = config.init_scale <= 0.0 && used.size() < space.dimension;
  std::vector<std::uint32_t> column(compact ? space.dimension : 0, 0);
  for (std::size_t j = 0; j < used.size() && compact; ++j) column[used[j]] = static_cast<std::uint32_t>(j);

  std::vector<Sample> indexed;
  indexed.reserve(samples.size());
  for (const auto& s : samples) {
    FeatureVector x = s.features;
    if (compact) {
      std::vector<FeatureVector::Entry> entries(s.features.entries().begin(), s.features.entries().end());
      for (auto& e : entries) e.index = column[e.index];
      x = FeatureVector::from_unsorted(std::move(entries));
    }
    indexed.push_back({std::move(x), model.class_index(s.label)});
  }

  const std::size_t k = classes.size();
  const std::size_t d = compact ? used.size() : space.dimension;
  MaxentObjective objective(indexed, k, d, config.l2);
  std::vector<double> theta(objective.parameter_count(), 0.0);
  if (config.init_scale > 0.0) {
    std::mt19937_64 rng(config.seed);
    for (std::size_t i = 0; i < k * d; ++i) theta[i] = config.init_scale * gaussian(rng);
  }

  std::vector<double> grad(theta.size());
  std::vector<double> next(theta.size());
  std::vector<double> next_grad(theta.size());
  double f = objective.value_and_gradient(theta, grad);

  TrainingTrace local;
  TrainingTrace& tr = trace ? *trace : local;
  tr = {};
  tr.losses.push_back(f);

  constexpr double kArmijo = 1e-4;
  double step = 1.0;
  for (std::size_t it = 0; it < config.max_iter; ++it) {
    tr.gradient_norm = inf_norm(grad);
    if (tr.gradient_norm < config.tol) {
      tr.converged = true;
      break;
    }
    const double gg = dot(grad, grad);
    double a = step;
    double fn = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < theta.size(); ++i) next[i] = theta[i] - a * grad[i];
      fn = objective.value(next);
      if (std::isfinite(fn) && fn <= f - kArmijo * a * gg) {
        accepted = true;
        break;
      }
      a *= 0.5;
    }
    if (!accepted) break;  // no representable descent step left

    fn = objective.value_and_gradient(next, next_grad);
    double ss = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double s = next[i] - theta[i];
      const double y = next_grad[i] - grad[i];
      ss += s * s;
      sy += s * y;
    }
    step = sy > 0.0 ? std::clamp(ss / sy, 1e-10, 1e10) : std::min(2.0 * a, 1e10);

    theta.swap(next);
    grad.swap(next_grad);
    f = fn;
    tr.losses.push_back(f);
    ++tr.iterations;
  }
  tr.gradient_norm = inf_norm(grad);
  if (tr.gradient_norm < config.tol) tr.converged = true;

  if (compact) {
    auto w = model.weights();
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t j = 0; j < d; ++j) w[c * space.dimension + used[j]] = theta[c * d + j];
    }
  } else {
    std::copy(theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(k * d),
              model.weights().begin());
  }
  std::copy(theta.begin() + static_cast<std::ptrdiff_t>(k * d), theta.end(), model.bias().begin());
  return model;
}

double maxent_loss(const LinearModel& model, std::span<const LabeledSample> samples, double l2) {
  std::vector<Sample> indexed;
  for (const auto& s : samples) {
    check_shape(s.features, model.dimension());
    indexed.push_back({s.features, model.class_index(s.label)});
  }
  std::vector<double> theta(model.weights().begin(), model.weights().end());
  theta.insert(theta.end(), model.bias().begin(), model.bias().end());
  return MaxentObjective(indexed, model.num_classes(), model.dimension(), l2).value(theta);
}

}  // namespace newsdesk::classifiers
