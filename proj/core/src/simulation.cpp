#include "alsim/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace alsim {

void SimulationConfig::validate() const {
  if (pools.known == 0 || pools.unknown == 0 || pools.test == 0) {
    throw std::invalid_argument("known, unknown and test pool sizes must all be positive");
  }
  if (batch_n == 0) throw std::invalid_argument("batch size must be positive");
  if (batch_n * num_queries > pools.unknown) {
    throw std::invalid_argument("query budget " + std::to_string(batch_n * num_queries) +
                                " exceeds unknown pool size " + std::to_string(pools.unknown));
  }
  alsim::validate(strategy);
  if (model.kind == ModelKind::knn && model.knn.k == 0) {
    throw std::invalid_argument("knn requires k >= 1");
  }
}

std::size_t SimulationConfig::population_size() const noexcept {
  const std::size_t total = pools.total();
  return total + (total % 2);
}

double evaluate_accuracy(const Classifier& classifier, const DataPool& test) {
  if (test.empty()) throw std::invalid_argument("cannot evaluate on an empty test pool");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < test.size(); ++i) {
    if (classifier.predict_label(test.features(i)) == test.label(i)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

std::vector<ScoredInstance> score_pool(const Classifier& classifier, const DataPool& unknown) {
  std::vector<ScoredInstance> scored;
  scored.reserve(unknown.size());
  for (std::size_t i = 0; i < unknown.size(); ++i) {
    scored.push_back({i, classifier.predict_proba(unknown.features(i))});
  }
  return scored;
}

RunResult run_query_loop(const SimulationConfig& config, const QueryObserver& observer) {
  config.validate();

  RunResult result;
  result.config = config;
  result.config.generator.population_size = config.population_size();
  result.config.generator.seed = derive_seed(config.seed, streams::kGeneration);

  const auto population = generate_population(result.config.generator);
  Rng split_rng(derive_seed(config.seed, streams::kSplit));
  auto [known, unknown, test] = split_pools(population, config.pools, split_rng);

  auto model = make_classifier(config.model);
  model->fit(known);
  result.records.reserve(config.num_queries + 1);
  result.records.push_back({0, known.size(), evaluate_accuracy(*model, test), {}});
  if (observer) observer({0, known, unknown, test, {}, {}, {}});

  for (std::size_t q = 1; q <= config.num_queries; ++q) {
    const auto scored = score_pool(*model, unknown);
    Rng query_rng(derive_seed(config.seed, streams::kQueryBase + q));
    const auto selected = select_batch(config.strategy, scored, config.batch_n, query_rng);

    QueryRecord record;
    record.query_index = q;
    record.selected_p_hats.reserve(selected.size());
    for (auto index : selected) record.selected_p_hats.push_back(scored[index].p_hat);

    auto annotated = annotate(unknown, selected);
    known.merge(annotated.batch);
    unknown = std::move(annotated.remaining);
    model->fit(known);

    record.known_size = known.size();
    record.test_accuracy = evaluate_accuracy(*model, test);
    result.records.push_back(std::move(record));

    if (observer) {
      observer({q, known, unknown, test, scored, selected, annotated.batch.ids()});
    }
  }
  return result;
}

std::vector<CurvePoint> aggregate_curve(std::span<const RunResult* const> runs) {
  std::vector<CurvePoint> points;
  if (runs.empty()) return points;
  const std::size_t length = runs.front()->records.size();
  std::vector<double> values(runs.size());
  for (std::size_t q = 0; q < length; ++q) {
    for (std::size_t r = 0; r < runs.size(); ++r) values[r] = runs[r]->records.at(q).test_accuracy;
    std::sort(values.begin(), values.end());

    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double squares = 0.0;
    for (double v : values) squares += (v - mean) * (v - mean);
    const double std_dev =
        values.size() > 1 ? std::sqrt(squares / static_cast<double>(values.size() - 1)) : 0.0;

    const auto& first = runs.front()->records[q];
    points.push_back({first.query_index, first.known_size, mean, std_dev, values.size()});
  }
  return points;
}

ExperimentResult run_experiment(const SimulationConfig& base_config,
                                std::span<const std::uint64_t> seeds,
                                std::span<const QueryStrategy> strategies, std::size_t threads) {
  if (seeds.empty()) throw std::invalid_argument("run_experiment needs at least one seed");
  if (strategies.empty()) throw std::invalid_argument("run_experiment needs at least one strategy");

  ExperimentResult result;
  result.seeds.assign(seeds.begin(), seeds.end());
  result.strategies.assign(strategies.begin(), strategies.end());

  std::vector<SimulationConfig> cells;
  cells.reserve(seeds.size() * strategies.size());
  for (auto seed : seeds) {
    for (const auto& strategy : strategies) {
      SimulationConfig cell = base_config;
      cell.seed = seed;
      cell.strategy = strategy;
      cell.validate();
      cells.push_back(cell);
    }
  }

  result.runs.resize(cells.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, cells.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        result.runs[i] = run_query_loop(cells[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t s = 0; s < strategies.size(); ++s) {
    std::vector<const RunResult*> column;
    column.reserve(seeds.size());
    for (std::size_t k = 0; k < seeds.size(); ++k) column.push_back(&result.run(k, s));
    result.curves.push_back({strategies[s], aggregate_curve(column)});
  }
  return result;
}

} // namespace alsim
