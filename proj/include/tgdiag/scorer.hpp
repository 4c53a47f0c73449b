// Copyright 2026 The tgdiag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tgdiag/baselines.hpp"
#include "tgdiag/graphdata.hpp"
#include "tgdiag/sampling.hpp"

namespace tgdiag {

/// Binary logistic regression, p = sigmoid(X w + b), with the mean binary
/// cross-entropy loss.
template <typename Scalar>
class LogisticRegression {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  LogisticRegression() = default;
  LogisticRegression(Vector weights, Scalar bias) : weights_(std::move(weights)), bias_(bias) {}

  const Vector& weights() const { return weights_; }
  Scalar bias() const { return bias_; }

  Vector linear(const Matrix& features) const {
    return (features * weights_).array() + bias_;
  }

  Vector predict(const Matrix& features) const {
    return linear(features).unaryExpr([](Scalar z) { return sigmoid(z); });
  }

  /// mean(softplus(z) - y z), evaluated without overflow for large |z|.
  Scalar loss(const Matrix& features, const Vector& labels) const {
    const Vector z = linear(features);
    Scalar total = 0;
    for (Eigen::Index i = 0; i < z.size(); ++i) total += softplus(z[i]) - labels[i] * z[i];
    return total / static_cast<Scalar>(z.size());
  }

  /// Gradient of loss() with respect to (weights, bias).
  std::pair<Vector, Scalar> gradient(const Matrix& features, const Vector& labels) const {
    const Vector residual = predict(features) - labels;
    const auto n = static_cast<Scalar>(features.rows());
    return {features.transpose() * residual / n, residual.sum() / n};
  }

  void step(const Matrix& features, const Vector& labels, Scalar learning_rate) {
    auto [grad_w, grad_b] = gradient(features, labels);
    weights_ -= learning_rate * grad_w;
    bias_ -= learning_rate * grad_b;
  }

  static Scalar sigmoid(Scalar z) {
    if (z >= 0) return Scalar(1) / (Scalar(1) + std::exp(-z));
    const Scalar e = std::exp(z);
    return e / (Scalar(1) + e);
  }

  static Scalar softplus(Scalar z) {
    return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
  }

 private:
  Vector weights_;
  Scalar bias_ = 0;
};

/// Hand-built temporal features of a query (u, v, t), computed from history
/// edges with timestamp < t and <= history_end:
///   seen-before indicator of (u, v), log1p of the degrees of u and v,
///   exp(-decay * gap) recencies of u, v and (u, v) (0 if never seen),
///   and, when the stream has node groups, a same-group indicator.
class FeatureExtractor {
 public:
  FeatureExtractor(const EdgeStream& stream, Timestamp history_end, double recency_decay);

  Eigen::Index dimension() const { return groups_.empty() ? 6 : 7; }
  Eigen::MatrixXd features(std::span<const TemporalEdge> queries) const;

 private:
  double decay_;
  std::vector<std::vector<Timestamp>> node_times_;
  std::unordered_map<std::uint64_t, std::vector<Timestamp>> pair_times_;
  std::vector<std::uint32_t> groups_;
};

struct ScorerConfig {
  double learning_rate = 0.1;
  int iterations = 500;
  double recency_decay = 0.5;
  Timestamp history_end = std::numeric_limits<Timestamp>::max();
  std::uint64_t seed = 0;
};

/// Logistic model over FeatureExtractor features, trained by full-batch
/// gradient descent. Initial weights are seeded uniform draws in [-0.01, 0.01].
class FeatureScorer {
 public:
  /// Throws InputError without both classes, TrainingError if the loss stops
  /// being finite.
  static FeatureScorer train(const LabeledExampleSet& examples, const EdgeStream& stream,
                             const ScorerConfig& config = {});

  PredictionSet predict(std::span<const TemporalEdge> queries,
                        std::string model_id = "feature_scorer") const;

  const LogisticRegression<double>& model() const { return model_; }
  const std::vector<double>& loss_history() const { return loss_history_; }

 private:
  FeatureScorer(FeatureExtractor extractor, LogisticRegression<double> model,
                std::vector<double> history)
      : extractor_(std::move(extractor)), model_(std::move(model)), loss_history_(std::move(history)) {}

  FeatureExtractor extractor_;
  LogisticRegression<double> model_;
  std::vector<double> loss_history_;
};

}  // namespace tgdiag
