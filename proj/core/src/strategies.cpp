#include "alsim/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "alsim/sampling.hpp"

namespace alsim {

namespace {

void check_batch(std::span<const ScoredInstance> pool, std::size_t n) {
  if (n > pool.size()) {
    throw std::invalid_argument("batch of " + std::to_string(n) +
                                " exceeds unknown pool of " + std::to_string(pool.size()));
  }
}

} // namespace

std::uint64_t uncertainty_key(double p_hat) noexcept {
  return static_cast<std::uint64_t>(std::llround(std::fabs(p_hat - 0.5) * 0x1.0p32));
}

std::string_view to_string(StrategyKind kind) noexcept {
  switch (kind) {
  case StrategyKind::passive: return "passive";
  case StrategyKind::uncertainty: return "uncertainty";
  case StrategyKind::bellcurve: return "bellcurve";
  }
  return "unknown";
}

StrategyKind parse_strategy_kind(std::string_view name) {
  for (auto kind : {StrategyKind::passive, StrategyKind::uncertainty, StrategyKind::bellcurve}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) +
                              "' (expected passive, uncertainty or bellcurve)");
}

std::string QueryStrategy::label() const {
  if (kind != StrategyKind::bellcurve) return std::string(to_string(kind));
  std::ostringstream out;
  out << "bellcurve(" << shape.alpha << ',' << shape.beta << ')';
  return out.str();
}

void validate(const QueryStrategy& strategy) {
  if (strategy.kind != StrategyKind::bellcurve) return;
  validate(strategy.shape);
  if (strategy.shape.alpha < 1.0 || strategy.shape.beta < 1.0) {
    throw std::invalid_argument("bell-curve sampling requires alpha >= 1 and beta >= 1");
  }
}

std::vector<std::size_t> passive_select(std::span<const ScoredInstance> pool, std::size_t n,
                                        Rng& rng) {
  check_batch(pool, n);
  auto positions = uniform_sample_without_replacement(pool.size(), n, rng);
  for (auto& p : positions) p = pool[p].pool_index;
  return positions;
}

std::vector<std::size_t> uncertainty_select(std::span<const ScoredInstance> pool,
                                            std::size_t n) {
  check_batch(pool, n);
  std::vector<ScoredInstance> ranked(pool.begin(), pool.end());
  const auto closer = [](const ScoredInstance& lhs, const ScoredInstance& rhs) {
    const auto dl = uncertainty_key(lhs.p_hat);
    const auto dr = uncertainty_key(rhs.p_hat);
    if (dl != dr) return dl < dr;
    return lhs.pool_index < rhs.pool_index;
  };
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n),
                    ranked.end(), closer);
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(ranked[i].pool_index);
  return out;
}

std::vector<std::size_t> bellcurve_select(std::span<const ScoredInstance> pool, std::size_t n,
                                          const BetaShape& shape, Rng& rng) {
  check_batch(pool, n);
  validate(QueryStrategy::bellcurve(shape));
  std::vector<double> weights;
  weights.reserve(pool.size());
  for (const auto& s : pool) weights.push_back(beta_pdf(s.p_hat, shape));
  auto positions = weighted_sample_without_replacement(weights, n, rng);
  for (auto& p : positions) p = pool[p].pool_index;
  return positions;
}

std::vector<std::size_t> select_batch(const QueryStrategy& strategy,
                                      std::span<const ScoredInstance> pool, std::size_t n,
                                      Rng& rng) {
  switch (strategy.kind) {
  case StrategyKind::passive: return passive_select(pool, n, rng);
  case StrategyKind::uncertainty: return uncertainty_select(pool, n);
  case StrategyKind::bellcurve: return bellcurve_select(pool, n, strategy.shape, rng);
  }
  throw std::invalid_argument("unhandled strategy kind");
}

AnnotationResult annotate(const DataPool& unknown, std::span<const std::size_t> selected) {
  if (!unknown.masked()) throw std::invalid_argument("annotate expects the masked unknown pool");

  std::vector<char> taken(unknown.size(), 0);
  for (auto index : selected) {
    if (index >= unknown.size()) {
      throw std::out_of_range("selected index " + std::to_string(index) +
                              " outside unknown pool of " + std::to_string(unknown.size()));
    }
    if (taken[index]) {
      throw std::invalid_argument("index " + std::to_string(index) + " selected twice");
    }
    taken[index] = 1;
  }

  std::vector<LabeledInstance> batch;
  std::vector<std::size_t> batch_ids;
  batch.reserve(selected.size());
  batch_ids.reserve(selected.size());
  for (auto index : selected) {
    batch.push_back(unknown.instances_[index]);
    batch_ids.push_back(unknown.ids_[index]);
  }

  std::vector<LabeledInstance> rest;
  std::vector<std::size_t> rest_ids;
  rest.reserve(unknown.size() - selected.size());
  rest_ids.reserve(unknown.size() - selected.size());
  for (std::size_t i = 0; i < unknown.size(); ++i) {
    if (taken[i]) continue;
    rest.push_back(unknown.instances_[i]);
    rest_ids.push_back(unknown.ids_[i]);
  }

  return {DataPool(PoolRole::known, std::move(batch), std::move(batch_ids)),
          DataPool(PoolRole::unknown, std::move(rest), std::move(rest_ids))};
}

} // namespace alsim
