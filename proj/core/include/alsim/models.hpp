#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "alsim/datasets.hpp"

namespace alsim {

enum class ModelKind { knn, logistic };

std::string_view to_string(ModelKind kind) noexcept;
ModelKind parse_model_kind(std::string_view name);

struct KnnParams {
  std::size_t k = 5;
};

struct LogisticParams {
  double learning_rate = 0.1;
  std::size_t iterations = 500;
  double l2_lambda = 1e-4;
  /// Expand x into [x_i] + [x_i * x_j for i <= j] before fitting.
  bool poly2 = false;
};

struct ModelSpec {
  ModelKind kind = ModelKind::knn;
  KnnParams knn;
  LogisticParams logistic;
};

/// Binary probabilistic classifier. fit() replaces any previous state.
class Classifier {
public:
  virtual ~Classifier() = default;

  /// Throws std::invalid_argument for an empty pool, std::logic_error for a
  /// masked one.
  virtual void fit(const DataPool& training) = 0;
  /// P(y = 1 | x). Throws std::logic_error if unfitted and
  /// std::invalid_argument on a dimension mismatch.
  virtual double predict_proba(std::span<const double> features) const = 0;
  virtual bool fitted() const noexcept = 0;

  /// 1 iff predict_proba >= 0.5.
  int predict_label(std::span<const double> features) const {
    return predict_proba(features) >= 0.5 ? 1 : 0;
  }
};

/// k-nearest neighbours by Euclidean distance with Laplace smoothing:
/// p = (#label-1 neighbours + 1) / (k + 2). Distance ties go to the lower
/// training index. With fewer than k training points all of them are used.
class KnnClassifier final : public Classifier {
public:
  explicit KnnClassifier(KnnParams params = {});

  void fit(const DataPool& training) override;
  double predict_proba(std::span<const double> features) const override;
  bool fitted() const noexcept override { return fitted_; }

  std::size_t stored_size() const noexcept { return labels_.size(); }
  std::size_t k() const noexcept { return params_.k; }

private:
  KnnParams params_;
  std::size_t dimension_ = 0;
  std::vector<double> points_;
  std::vector<int> labels_;
  bool fitted_ = false;
};

/// L2-regularized mean log-loss over an expanded design. Weight layout:
/// w[0] is the unpenalized bias, w[1..] match the design columns.
struct LogisticObjective {
  std::vector<std::vector<double>> design;
  std::vector<int> labels;
  double l2_lambda = 0.0;

  double loss(std::span<const double> weights) const;
  std::vector<double> gradient(std::span<const double> weights) const;
};

/// Logistic regression trained by full-batch gradient descent from zero
/// weights.
class LogisticClassifier final : public Classifier {
public:
  explicit LogisticClassifier(LogisticParams params = {});

  void fit(const DataPool& training) override;
  double predict_proba(std::span<const double> features) const override;
  bool fitted() const noexcept override { return fitted_; }

  const std::vector<double>& weights() const noexcept { return weights_; }
  /// Training loss before each iteration and after the last one
  /// (iterations + 1 entries).
  const std::vector<double>& loss_history() const noexcept { return loss_history_; }

  static std::vector<double> expand(std::span<const double> features, bool poly2);

private:
  LogisticParams params_;
  std::size_t dimension_ = 0;
  std::vector<double> weights_;
  std::vector<double> loss_history_;
  bool fitted_ = false;
};

double sigmoid(double z) noexcept;

std::unique_ptr<Classifier> make_classifier(const ModelSpec& spec);

} // namespace alsim
