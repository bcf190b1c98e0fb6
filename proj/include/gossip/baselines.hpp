#pragma once

#include <cstdint>
#include <vector>

#include "gossip/data.hpp"
#include "gossip/linear_model.hpp"
#include "gossip/rng.hpp"

namespace gossip {

// N models trained on independent uniform draws from the training set; the
// reference point for the weighted-bagging baselines.
struct ModelPopulation {
  std::vector<LinearModel> models;
  std::vector<RngStream> streams;    // one independent draw stream per model
  std::vector<std::uint32_t> order;  // fixed random consultation order for WB2
  std::int64_t samples_per_model = 0;
};

// Plain Pegasos: uniform draws with replacement, starting from the zero model.
LinearModel sequential_pegasos(const Dataset& train, std::int64_t iterations, double lambda,
                               std::uint64_t seed);

ModelPopulation population_init(std::uint32_t n_models, std::uint32_t dim, const RngStream& base_stream);

// Advances every model by one Pegasos update on its own independent stream.
void population_advance(ModelPopulation& pop, const Dataset& train, double lambda);

// sign(sum_i <x, w_i>) over the whole population.
int wb1_predict(const ModelPopulation& pop, const LabeledExample& x);

// Same vote restricted to the first min(2^cycle, N) models in fixed order.
int wb2_predict(const ModelPopulation& pop, const LabeledExample& x, std::uint32_t cycle);

double wb1_error(const ModelPopulation& pop, const Dataset& test);
double wb2_error(const ModelPopulation& pop, const Dataset& test, std::uint32_t cycle);

}  // namespace gossip
