#include "gossip/baselines.hpp"

#include <numeric>
#include <stdexcept>

namespace gossip {

LinearModel sequential_pegasos(const Dataset& train, std::int64_t iterations, double lambda,
                               std::uint64_t seed) {
  if (train.examples.empty()) throw std::invalid_argument("sequential_pegasos: empty training set");
  if (iterations < 1) throw std::invalid_argument("sequential_pegasos: iterations must be >= 1");
  RngStream rng(seed, RngStreamId::Baseline);
  LinearModel m = init_model(train.dim);
  for (std::int64_t i = 0; i < iterations; ++i) {
    const auto pick = static_cast<std::size_t>(rng.uniform_index(train.size()));
    m = pegasos_update(m, train.examples[pick], lambda);
  }
  return m;
}

ModelPopulation population_init(std::uint32_t n_models, std::uint32_t dim, const RngStream& base_stream) {
  if (n_models == 0) throw std::invalid_argument("population_init: need at least one model");
  ModelPopulation pop;
  pop.models.assign(n_models, init_model(dim));
  pop.streams.reserve(n_models);
  for (std::uint32_t i = 0; i < n_models; ++i) pop.streams.push_back(base_stream.child(i));
  RngStream order_rng = base_stream.child(n_models);
  pop.order.resize(n_models);
  std::iota(pop.order.begin(), pop.order.end(), 0);
  order_rng.shuffle(pop.order);
  return pop;
}

void population_advance(ModelPopulation& pop, const Dataset& train, double lambda) {
  // Independent streams make the result invariant to model training order.
  for (std::size_t i = 0; i < pop.models.size(); ++i) {
    const auto pick = static_cast<std::size_t>(pop.streams[i].uniform_index(train.size()));
    pop.models[i] = pegasos_update(pop.models[i], train.examples[pick], lambda);
  }
  ++pop.samples_per_model;
}

namespace {

std::uint64_t wb2_count(std::uint64_t n_models, std::uint32_t cycle) {
  if (cycle >= 63) return n_models;
  const std::uint64_t limit = std::uint64_t{1} << cycle;
  return limit < n_models ? limit : n_models;
}

}  // namespace

int wb1_predict(const ModelPopulation& pop, const LabeledExample& x) {
  if (pop.models.empty()) throw std::invalid_argument("wb1_predict: empty population");
  double sum = 0.0;
  for (const auto& m : pop.models) sum += dot(m.w, x);
  return sum >= 0.0 ? 1 : -1;
}

int wb2_predict(const ModelPopulation& pop, const LabeledExample& x, std::uint32_t cycle) {
  if (pop.models.empty()) throw std::invalid_argument("wb2_predict: empty population");
  const std::uint64_t count = wb2_count(pop.models.size(), cycle);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) sum += dot(pop.models[pop.order[i]].w, x);
  return sum >= 0.0 ? 1 : -1;
}

double wb1_error(const ModelPopulation& pop, const Dataset& test) {
  if (test.examples.empty()) throw std::invalid_argument("wb1_error: empty test set");
  std::size_t wrong = 0;
  for (const auto& ex : test.examples) {
    if (wb1_predict(pop, ex) != ex.label) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(test.size());
}

double wb2_error(const ModelPopulation& pop, const Dataset& test, std::uint32_t cycle) {
  if (test.examples.empty()) throw std::invalid_argument("wb2_error: empty test set");
  std::size_t wrong = 0;
  for (const auto& ex : test.examples) {
    if (wb2_predict(pop, ex, cycle) != ex.label) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(test.size());
}

}  // namespace gossip
