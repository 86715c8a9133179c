#include "alsim/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace alsim {

namespace {

void check_training(const DataPool& training) {
  if (training.masked()) throw std::logic_error("cannot fit on a masked pool");
  if (training.empty()) throw std::invalid_argument("cannot fit on an empty pool");
}

void check_query(bool fitted, std::size_t expected, std::size_t actual) {
  if (!fitted) throw std::logic_error("classifier has not been fitted");
  if (expected != actual) {
    throw std::invalid_argument("feature dimension " + std::to_string(actual) +
                                " does not match training dimension " +
                                std::to_string(expected));
  }
}

// log(1 + exp(z)) without overflow.
double softplus(double z) noexcept {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double affine(std::span<const double> weights, std::span<const double> x) noexcept {
  double z = weights[0];
  for (std::size_t j = 0; j < x.size(); ++j) z += weights[j + 1] * x[j];
  return z;
}

} // namespace

std::string_view to_string(ModelKind kind) noexcept {
  return kind == ModelKind::knn ? "knn" : "logistic";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "knn") return ModelKind::knn;
  if (name == "logistic") return ModelKind::logistic;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (expected knn or logistic)");
}

double sigmoid(double z) noexcept {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// --- kNN ---------------------------------------------------------------------

KnnClassifier::KnnClassifier(KnnParams params) : params_(params) {
  if (params_.k == 0) throw std::invalid_argument("knn requires k >= 1");
}

void KnnClassifier::fit(const DataPool& training) {
  check_training(training);
  dimension_ = training.dimension();
  points_.clear();
  labels_.clear();
  points_.reserve(training.size() * dimension_);
  labels_.reserve(training.size());
  for (std::size_t i = 0; i < training.size(); ++i) {
    const auto x = training.features(i);
    points_.insert(points_.end(), x.begin(), x.end());
    labels_.push_back(training.label(i));
  }
  fitted_ = true;
}

double KnnClassifier::predict_proba(std::span<const double> features) const {
  check_query(fitted_, dimension_, features.size());
  const std::size_t n = labels_.size();
  const std::size_t k = std::min(params_.k, n);

  std::vector<std::pair<double, std::size_t>> distances(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* p = points_.data() + i * dimension_;
    double d2 = 0.0;
    for (std::size_t j = 0; j < dimension_; ++j) {
      const double diff = p[j] - features[j];
      d2 += diff * diff;
    }
    distances[i] = {d2, i};
  }
  std::partial_sort(distances.begin(), distances.begin() + static_cast<std::ptrdiff_t>(k),
                    distances.end());

  std::size_t positives = 0;
  for (std::size_t i = 0; i < k; ++i) positives += labels_[distances[i].second] == 1 ? 1 : 0;
  return (static_cast<double>(positives) + 1.0) / (static_cast<double>(k) + 2.0);
}

// --- logistic regression -----------------------------------------------------

double LogisticObjective::loss(std::span<const double> weights) const {
  double total = 0.0;
  for (std::size_t i = 0; i < design.size(); ++i) {
    const double z = affine(weights, design[i]);
    total += softplus(z) - labels[i] * z;
  }
  double penalty = 0.0;
  for (std::size_t j = 1; j < weights.size(); ++j) penalty += weights[j] * weights[j];
  return total / static_cast<double>(design.size()) + 0.5 * l2_lambda * penalty;
}

std::vector<double> LogisticObjective::gradient(std::span<const double> weights) const {
  std::vector<double> grad(weights.size(), 0.0);
  for (std::size_t i = 0; i < design.size(); ++i) {
    const double residual = sigmoid(affine(weights, design[i])) - labels[i];
    grad[0] += residual;
    for (std::size_t j = 0; j < design[i].size(); ++j) grad[j + 1] += residual * design[i][j];
  }
  const double scale = 1.0 / static_cast<double>(design.size());
  for (auto& g : grad) g *= scale;
  for (std::size_t j = 1; j < weights.size(); ++j) grad[j] += l2_lambda * weights[j];
  return grad;
}

LogisticClassifier::LogisticClassifier(LogisticParams params) : params_(params) {
  if (!(params_.learning_rate > 0.0)) {
    throw std::invalid_argument("logistic learning_rate must be > 0");
  }
  if (!(params_.l2_lambda >= 0.0)) throw std::invalid_argument("logistic l2_lambda must be >= 0");
}

std::vector<double> LogisticClassifier::expand(std::span<const double> features, bool poly2) {
  std::vector<double> out(features.begin(), features.end());
  if (poly2) {
    for (std::size_t i = 0; i < features.size(); ++i) {
      for (std::size_t j = i; j < features.size(); ++j) out.push_back(features[i] * features[j]);
    }
  }
  return out;
}

void LogisticClassifier::fit(const DataPool& training) {
  check_training(training);
  dimension_ = training.dimension();

  LogisticObjective objective;
  objective.l2_lambda = params_.l2_lambda;
  objective.design.reserve(training.size());
  objective.labels.reserve(training.size());
  for (std::size_t i = 0; i < training.size(); ++i) {
    objective.design.push_back(expand(training.features(i), params_.poly2));
    objective.labels.push_back(training.label(i));
  }

  const std::size_t width = objective.design.front().size() + 1;
  weights_.assign(width, 0.0);
  loss_history_.clear();
  loss_history_.reserve(params_.iterations + 1);
  for (std::size_t it = 0; it < params_.iterations; ++it) {
    loss_history_.push_back(objective.loss(weights_));
    const auto grad = objective.gradient(weights_);
    for (std::size_t j = 0; j < width; ++j) weights_[j] -= params_.learning_rate * grad[j];
  }
  loss_history_.push_back(objective.loss(weights_));
  fitted_ = true;
}

double LogisticClassifier::predict_proba(std::span<const double> features) const {
  check_query(fitted_, dimension_, features.size());
  return sigmoid(affine(weights_, expand(features, params_.poly2)));
}

std::unique_ptr<Classifier> make_classifier(const ModelSpec& spec) {
  if (spec.kind == ModelKind::knn) return std::make_unique<KnnClassifier>(spec.knn);
  return std::make_unique<LogisticClassifier>(spec.logistic);
}

} // namespace alsim
