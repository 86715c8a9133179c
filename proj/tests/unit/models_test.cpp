#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "alsim/datasets.hpp"
#include "alsim/models.hpp"
#include "alsim/simulation.hpp"

using alsim::DataPool;
using alsim::LabeledInstance;
using alsim::PoolRole;
using alsim::Rng;

namespace {

DataPool known_pool(std::vector<LabeledInstance> data) {
  std::vector<std::size_t> ids(data.size());
  std::iota(ids.begin(), ids.end(), 0u);
  return DataPool(PoolRole::known, std::move(data), std::move(ids));
}

DataPool line_pool() {
  // Five points on a line: labels 1 1 1 1 0 from the left.
  return known_pool({{{0.0}, 1}, {{1.0}, 1}, {{2.0}, 1}, {{3.0}, 1}, {{4.0}, 0}});
}

} // namespace

TEST(Knn, StoresTrainingSet) {
  alsim::KnnClassifier knn;
  EXPECT_FALSE(knn.fitted());
  knn.fit(line_pool());
  EXPECT_TRUE(knn.fitted());
  EXPECT_EQ(knn.stored_size(), 5u);
  EXPECT_EQ(knn.k(), 5u);
}

TEST(Knn, LaplaceSmoothing) {
  // All five neighbours are used: 4 positives -> (4+1)/(5+2).
  alsim::KnnClassifier knn({5});
  knn.fit(line_pool());
  const double x[] = {2.0};
  EXPECT_DOUBLE_EQ(knn.predict_proba(x), 5.0 / 7.0);

  // k = 3 near the left end: 3 positives -> 4/5.
  alsim::KnnClassifier knn3({3});
  knn3.fit(line_pool());
  const double left[] = {0.0};
  EXPECT_DOUBLE_EQ(knn3.predict_proba(left), 0.8);
  // k = 3 at the right end: neighbours 4 (0), 3 (1), 2 (1) -> 3/5.
  const double right[] = {4.0};
  EXPECT_DOUBLE_EQ(knn3.predict_proba(right), 0.6);
  const double far_right[] = {100.0};
  EXPECT_DOUBLE_EQ(knn3.predict_proba(far_right), 0.6);
}

TEST(Knn, OnePositiveNeighbourOfFourAgainstZero) {
  alsim::KnnClassifier knn({4});
  knn.fit(known_pool({{{0.0}, 0}, {{0.1}, 0}, {{0.2}, 0}, {{0.3}, 0}}));
  const double x[] = {0.0};
  EXPECT_DOUBLE_EQ(knn.predict_proba(x), 1.0 / 6.0);
}

TEST(Knn, FewerPointsThanK) {
  alsim::KnnClassifier knn({5});
  knn.fit(known_pool({{{0.0}, 1}, {{1.0}, 0}, {{2.0}, 1}}));
  const double x[] = {0.0};
  EXPECT_DOUBLE_EQ(knn.predict_proba(x), 3.0 / 5.0);
}

TEST(Knn, DistanceTiesGoToLowerIndex) {
  // Query at 0: points at -1 (label 0, index 0) and +1 (label 1, index 1)
  // are equidistant; k = 1 must take index 0.
  alsim::KnnClassifier knn({1});
  knn.fit(known_pool({{{-1.0}, 0}, {{1.0}, 1}}));
  const double x[] = {0.0};
  EXPECT_DOUBLE_EQ(knn.predict_proba(x), 1.0 / 3.0);

  alsim::KnnClassifier swapped({1});
  swapped.fit(known_pool({{{1.0}, 1}, {{-1.0}, 0}}));
  EXPECT_DOUBLE_EQ(swapped.predict_proba(x), 2.0 / 3.0);
}

TEST(Knn, KOneRecoversOwnLabel) {
  Rng rng(2);
  const auto data = alsim::gen_moons(200, 0.2, rng);
  alsim::KnnClassifier knn({1});
  knn.fit(known_pool(data));
  for (const auto& inst : data) {
    EXPECT_EQ(knn.predict_label(inst.features), inst.label);
  }
}

TEST(Knn, Errors) {
  alsim::KnnClassifier knn;
  const double x[] = {0.0};
  EXPECT_THROW((void)knn.predict_proba(x), std::logic_error);
  EXPECT_THROW(knn.fit(known_pool({})), std::invalid_argument);
  EXPECT_THROW(alsim::KnnClassifier({0}), std::invalid_argument);
  knn.fit(line_pool());
  const double two[] = {0.0, 1.0};
  EXPECT_THROW((void)knn.predict_proba(two), std::invalid_argument);
  DataPool masked(PoolRole::unknown, {{{0.0}, 1}}, {0});
  EXPECT_THROW(knn.fit(masked), std::logic_error);
}

TEST(Logistic, ZeroIterationsPredictsHalf) {
  alsim::LogisticClassifier model({0.1, 0, 1e-4, false});
  model.fit(line_pool());
  const double x[] = {123.0};
  EXPECT_DOUBLE_EQ(model.predict_proba(x), 0.5);
  EXPECT_EQ(model.loss_history().size(), 1u);
  EXPECT_NEAR(model.loss_history().front(), std::log(2.0), 1e-15);
}

TEST(Logistic, SeparableBlobs) {
  // One draw so train and test share blob centres.
  Rng rng(6);
  const auto all = alsim::gen_blobs(1400, 0.5, rng);
  Rng split_rng(7);
  const auto split = alsim::split_pools(all, {400, 0, 1000}, split_rng);
  alsim::LogisticClassifier model({0.1, 500, 1e-4, false});
  model.fit(split.known);
  EXPECT_GE(alsim::evaluate_accuracy(model, split.test), 0.95);
}

TEST(Logistic, LossNonIncreasingAtSmallStep) {
  for (auto family : {alsim::Family::classification, alsim::Family::blobs,
                      alsim::Family::circles, alsim::Family::moons}) {
    alsim::GeneratorConfig config;
    config.family = family;
    config.population_size = 300;
    config.aur_param = family == alsim::Family::circles  ? 0.8
                       : family == alsim::Family::moons ? 0.2
                                                         : 2.0;
    config.seed = 3;
    alsim::LogisticClassifier model({0.01, 300, 1e-4, true});
    model.fit(known_pool(alsim::generate_population(config)));
    const auto& history = model.loss_history();
    ASSERT_EQ(history.size(), 301u);
    for (std::size_t i = 1; i < history.size(); ++i) {
      ASSERT_LE(history[i], history[i - 1] + 1e-12) << alsim::to_string(family) << " step " << i;
    }
  }
}

TEST(Logistic, GradientMatchesFiniteDifferences) {
  Rng rng(8);
  const auto data = alsim::gen_moons(60, 0.2, rng);
  alsim::LogisticObjective objective;
  for (const auto& inst : data) {
    objective.design.push_back(alsim::LogisticClassifier::expand(inst.features, true));
    objective.labels.push_back(inst.label);
  }
  objective.l2_lambda = 0.05;
  const std::size_t dim = objective.design.front().size() + 1;
  std::vector<double> w(dim);
  for (std::size_t i = 0; i < dim; ++i) w[i] = 0.3 * std::sin(1.7 * static_cast<double>(i) + 0.2);

  const auto analytic = objective.gradient(w);
  ASSERT_EQ(analytic.size(), dim);
  const double h = 1e-6;
  for (std::size_t i = 0; i < dim; ++i) {
    auto plus = w;
    auto minus = w;
    plus[i] += h;
    minus[i] -= h;
    const double numeric = (objective.loss(plus) - objective.loss(minus)) / (2 * h);
    const double scale = std::max(1.0, std::abs(numeric));
    EXPECT_NEAR(analytic[i], numeric, 1e-6 * scale) << "component " << i;
  }
}

TEST(Logistic, ExpandPoly2) {
  const double x[] = {2.0, 3.0};
  EXPECT_EQ(alsim::LogisticClassifier::expand(x, false), (std::vector<double>{2, 3}));
  EXPECT_EQ(alsim::LogisticClassifier::expand(x, true), (std::vector<double>{2, 3, 4, 6, 9}));
}

TEST(Logistic, DeterministicAndOrderInvariant) {
  Rng rng(9);
  auto data = alsim::gen_circles(120, 0.5, 0.1, rng);
  alsim::LogisticClassifier a({0.1, 200, 1e-4, true});
  alsim::LogisticClassifier b({0.1, 200, 1e-4, true});
  a.fit(known_pool(data));
  b.fit(known_pool(data));
  EXPECT_EQ(a.weights(), b.weights());

  std::reverse(data.begin(), data.end());
  alsim::LogisticClassifier c({0.1, 200, 1e-4, true});
  c.fit(known_pool(data));
  ASSERT_EQ(a.weights().size(), c.weights().size());
  for (std::size_t i = 0; i < a.weights().size(); ++i) {
    EXPECT_NEAR(a.weights()[i], c.weights()[i], 1e-10);
  }
}

TEST(Logistic, SingleClassLeansTowardThatClass) {
  alsim::LogisticClassifier model;
  model.fit(known_pool({{{0.0, 1.0}, 1}, {{1.0, 0.0}, 1}, {{2.0, 2.0}, 1}}));
  const double x[] = {0.5, 0.5};
  EXPECT_GT(model.predict_proba(x), 0.5);
  EXPECT_EQ(model.predict_label(x), 1);
}

TEST(Logistic, Errors) {
  alsim::LogisticClassifier model;
  const double x[] = {0.0};
  EXPECT_THROW((void)model.predict_proba(x), std::logic_error);
  EXPECT_THROW(model.fit(known_pool({})), std::invalid_argument);
  model.fit(line_pool());
  const double two[] = {0.0, 1.0};
  EXPECT_THROW((void)model.predict_proba(two), std::invalid_argument);
}

TEST(Sigmoid, StableAtExtremes) {
  EXPECT_DOUBLE_EQ(alsim::sigmoid(0.0), 0.5);
  EXPECT_EQ(alsim::sigmoid(-1000.0), 0.0);
  EXPECT_EQ(alsim::sigmoid(1000.0), 1.0);
  EXPECT_NEAR(alsim::sigmoid(2.0) + alsim::sigmoid(-2.0), 1.0, 1e-15);
}

TEST(Factory, BuildsRequestedKind) {
  alsim::ModelSpec spec;
  spec.kind = alsim::ModelKind::knn;
  spec.knn.k = 3;
  auto knn = alsim::make_classifier(spec);
  ASSERT_NE(dynamic_cast<alsim::KnnClassifier*>(knn.get()), nullptr);
  spec.kind = alsim::ModelKind::logistic;
  auto logistic = alsim::make_classifier(spec);
  ASSERT_NE(dynamic_cast<alsim::LogisticClassifier*>(logistic.get()), nullptr);
  EXPECT_EQ(alsim::parse_model_kind("knn"), alsim::ModelKind::knn);
  EXPECT_THROW(alsim::parse_model_kind("svm"), std::invalid_argument);
}
