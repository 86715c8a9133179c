#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "alsim/datasets.hpp"
#include "alsim/models.hpp"
#include "alsim/strategies.hpp"

namespace alsim {

/// Sub-stream identifiers for derive_seed(). Keeping generation and splitting
/// on their own streams means every strategy run with the same master seed
/// sees the same pools.
namespace streams {
inline constexpr std::uint64_t kGeneration = 1;
inline constexpr std::uint64_t kSplit = 2;
inline constexpr std::uint64_t kQueryBase = 1000;
} // namespace streams

struct SimulationConfig {
  /// Population size and seed are filled in by run_query_loop.
  GeneratorConfig generator;
  QueryStrategy strategy;
  ModelSpec model;
  PoolSizes pools;
  std::size_t batch_n = 5;
  std::size_t num_queries = 20;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on zero pool sizes, a query budget larger
  /// than the unknown pool, or an invalid strategy shape.
  void validate() const;
  /// known + unknown + test, rounded up to even for exact class balance.
  std::size_t population_size() const noexcept;
};

struct QueryRecord {
  std::size_t query_index = 0;
  std::size_t known_size = 0;
  double test_accuracy = 0.0;
  /// p_hat of each selected instance at selection time; empty for query 0.
  std::vector<double> selected_p_hats;
};

struct RunResult {
  SimulationConfig config;
  /// num_queries + 1 entries; index 0 is the prior model.
  std::vector<QueryRecord> records;
};

/// Snapshot handed to an observer after each query (and after the prior fit).
struct QueryState {
  std::size_t query_index;
  const DataPool& known;
  const DataPool& unknown;
  const DataPool& test;
  /// Scores of the unknown pool before selection; empty for query 0.
  std::span<const ScoredInstance> scored;
  /// Positions in the pre-selection unknown pool; empty for query 0.
  std::span<const std::size_t> selected;
  /// Instance identities of the selected batch.
  std::span<const std::size_t> selected_ids;
};

using QueryObserver = std::function<void(const QueryState&)>;

/// Fraction of the test pool whose predicted label equals the true label.
/// Throws std::invalid_argument for an empty pool.
double evaluate_accuracy(const Classifier& classifier, const DataPool& test);

/// Scores every unknown instance with the current model.
std::vector<ScoredInstance> score_pool(const Classifier& classifier, const DataPool& unknown);

/// Generate, split, fit the prior model, then num_queries rounds of
/// score -> select -> annotate -> merge -> refit -> evaluate.
RunResult run_query_loop(const SimulationConfig& config, const QueryObserver& observer = {});

struct CurvePoint {
  std::size_t query_index = 0;
  std::size_t known_size = 0;
  double mean_accuracy = 0.0;
  /// Sample standard deviation (n - 1); 0 for a single run.
  double std_accuracy = 0.0;
  std::size_t runs = 0;
};

struct StrategyCurve {
  QueryStrategy strategy;
  std::vector<CurvePoint> points;
};

struct ExperimentResult {
  std::vector<std::uint64_t> seeds;
  std::vector<QueryStrategy> strategies;
  /// Seed-major, strategy-minor.
  std::vector<RunResult> runs;
  /// One curve per strategy, in the order given.
  std::vector<StrategyCurve> curves;

  const RunResult& run(std::size_t seed_index, std::size_t strategy_index) const {
    return runs.at(seed_index * strategies.size() + strategy_index);
  }
};

/// Runs every (seed, strategy) cell of base_config and aggregates per-query
/// mean and sample std of test accuracy. `threads` == 0 uses the hardware
/// concurrency. Output does not depend on thread count or completion order.
ExperimentResult run_experiment(const SimulationConfig& base_config,
                                std::span<const std::uint64_t> seeds,
                                std::span<const QueryStrategy> strategies,
                                std::size_t threads = 1);

/// Per-query mean/std across runs. Values are summed in sorted order so the
/// result is independent of run order.
std::vector<CurvePoint> aggregate_curve(std::span<const RunResult* const> runs);

} // namespace alsim
