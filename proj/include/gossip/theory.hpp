#pragma once

#include <cstdint>
#include <vector>

#include "gossip/data.hpp"
#include "gossip/linear_model.hpp"

namespace gossip {

// Inputs of the averaged-regret bound check: the reference optimum, the
// regularizer, and a bound on subgradient norms.
struct TheoryContext {
  std::vector<double> w_star;
  double lambda = 0.0;
  double g_bound = 0.0;
};

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Reference optimum of the regularized hinge objective: seeded stochastic
// subgradient descent with iterate averaging, returning the candidate with
// the smallest objective value seen.
std::vector<double> compute_w_star(const Dataset& train, double lambda,
                                   std::int64_t iterations = 1000000, std::uint64_t seed = 1);

// lambda * w_radius + max_i ||x_i||: a bound on ||lambda w - 1[viol] y x||
// over all models with norm <= w_radius.
double estimate_G(const Dataset& train, double lambda, double w_radius);

double max_example_norm(const Dataset& train);

// One instrumented merge-update step: extends the probe of whichever ancestor
// lies farther from w_star (ties to `a`) by the regret of the averaged model
// on the local example.
RegretProbe probe_merge_update(const LinearModel& a, const LinearModel& b,
                               const LabeledExample& example, const TheoryContext& ctx);

// lhs = regret_sum / t vs rhs = G^2 (ln t + 1) / (2 lambda t).
BoundCheck check_bound(const RegretProbe& probe, const TheoryContext& ctx);

}  // namespace gossip
