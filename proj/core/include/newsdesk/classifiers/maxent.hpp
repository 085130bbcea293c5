#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/textproc/sparse_vector.hpp"

namespace newsdesk::classifiers {

using FeatureVector = textproc::SparseVector;

/// Binds feature indices to their definitions, e.g. a TF-IDF vocabulary or a
/// hashed n-gram layout. `dimension` is the number of features.
struct FeatureSpace {
  std::string kind;
  std::size_t dimension = 0;
  nlohmann::json descriptor = nlohmann::json::object();

  friend bool operator==(const FeatureSpace&, const FeatureSpace&) = default;
};

/// Multinomial logistic (maximum entropy) model: softmax(W x + b).
class LinearModel {
 public:
  LinearModel() = default;
  LinearModel(std::vector<std::string> classes, FeatureSpace space);

  bool fitted() const noexcept { return !classes_.empty(); }
  const std::vector<std::string>& classes() const noexcept { return classes_; }
  const FeatureSpace& feature_space() const noexcept { return space_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  std::size_t dimension() const noexcept { return space_.dimension; }

  /// Row-major |classes| x dimension.
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<double> weights() noexcept { return weights_; }
  std::span<const double> bias() const noexcept { return bias_; }
  std::span<double> bias() noexcept { return bias_; }

  double weight(std::size_t cls, std::size_t feature) const {
    return weights_[cls * space_.dimension + feature];
  }

  /// W x + b. Throws NotFitted, or ShapeError when x has an index outside the
  /// feature space.
  std::vector<double> scores(const FeatureVector& x) const;

  /// softmax(W x + b); entries strictly positive and summing to 1.
  std::vector<double> predict_proba(const FeatureVector& x) const;

  /// Index of the most probable class; ties go to the earlier class.
  std::size_t predict(const FeatureVector& x) const;

  std::size_t class_index(const std::string& label) const;

  nlohmann::json to_json() const;
  static LinearModel from_json(const nlohmann::json& j);

  void save(const std::filesystem::path& path) const;
  static LinearModel load(const std::filesystem::path& path);

  friend bool operator==(const LinearModel&, const LinearModel&) = default;

 private:
  std::vector<std::string> classes_;
  FeatureSpace space_;
  std::vector<double> weights_;
  std::vector<double> bias_;
};

/// Softmax over a score vector, max-shifted and floored at the smallest
/// normal double so every component is positive.
std::vector<double> softmax(std::span<const double> scores);

struct Sample {
  FeatureVector features;
  std::size_t label = 0;  // index into the class list
};

struct LabeledSample {
  FeatureVector features;
  std::string label;
};

struct TrainConfig {
  double l2 = 1e-4;
  std::size_t max_iter = 500;
  double tol = 1e-6;            // on the gradient infinity norm
  std::uint64_t seed = 0;
  double init_scale = 0.0;      // stddev of the seeded initial weights
};

struct TrainingTrace {
  std::vector<double> losses;   // objective after each accepted step, initial first
  std::size_t iterations = 0;
  double gradient_norm = 0.0;   // infinity norm at exit
  bool converged = false;
};

/// Mean multinomial cross-entropy plus (l2 / 2) ||W||^2 (bias unpenalized),
/// over a flattened parameter vector [W row-major, b].
class MaxentObjective {
 public:
  MaxentObjective(std::span<const Sample> samples, std::size_t num_classes,
                  std::size_t dimension, double l2);

  std::size_t parameter_count() const noexcept { return k_ * d_ + k_; }

  double value(std::span<const double> params) const;

  /// Returns the objective and writes its gradient into `grad`.
  double value_and_gradient(std::span<const double> params, std::span<double> grad) const;

 private:
  std::span<const Sample> samples_;
  std::size_t k_;
  std::size_t d_;
  double l2_;
};

/// Minimizes MaxentObjective by full-batch gradient descent with
/// Barzilai-Borwein trial steps and Armijo backtracking, so every accepted
/// step lowers the objective. Stops when the gradient infinity norm drops
/// below `tol` or after `max_iter` steps.
///
/// `classes` fixes the class order; when empty, the sorted distinct labels
/// are used. Throws DegenerateLabels for fewer than two distinct labels and
/// ShapeError when a feature index is out of range.
LinearModel train_maxent(std::span<const LabeledSample> samples, FeatureSpace space,
                         const TrainConfig& config, std::vector<std::string> classes = {},
                         TrainingTrace* trace = nullptr);

/// Mean objective of a fitted model on labeled data.
double maxent_loss(const LinearModel& model, std::span<const LabeledSample> samples, double l2);

}  // namespace newsdesk::classifiers
