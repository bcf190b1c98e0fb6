#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gossip/data.hpp"

namespace gossip {

// Regret bookkeeping along the farthest-ancestor path of a merge history.
// Present only in instrumented runs; see theory.hpp for the operations.
struct RegretProbe {
  std::int64_t path_len = 0;
  double regret_sum = 0.0;
};

// Optional creation record, enabled by lineage-recording runs. `walk` links to
// the record of the model this one was derived from; `other` is the second
// merge ancestor (null for plain random-walk updates).
struct LineageNode {
  std::uint64_t id = 0;
  std::uint32_t node = 0;          // node where the model was created
  std::int64_t example = -1;       // training-example index used by the update
  std::shared_ptr<const LineageNode> walk;
  std::shared_ptr<const LineageNode> other;
};

// The unit that travels the network: dense weights plus an age counter.
struct LinearModel {
  std::vector<double> w;
  std::int64_t t = 0;
  std::optional<RegretProbe> probe;
  std::shared_ptr<const LineageNode> lineage;

  std::size_t dim() const { return w.size(); }
};

struct HyperParams {
  double lambda = 1e-4;
  double eta_adaline = 0.01;
  std::uint32_t dim = 0;
};

// Zero model of the given dimension, age 0.
LinearModel init_model(std::uint32_t dim);

double dot(std::span<const double> w, const LabeledExample& ex);
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> w);

// max{0, 1 - y<w,x>}
double hinge_loss(std::span<const double> w, const LabeledExample& ex);

// lambda/2 ||w||^2 + hinge(w; example) -- the per-example objective.
double local_objective(std::span<const double> w, const LabeledExample& ex, double lambda);

// lambda/2 ||w||^2 + mean hinge loss over the dataset.
double global_objective(std::span<const double> w, const Dataset& data, double lambda);

// One Pegasos step with learning rate 1/(lambda * (t+1)). The shrink factor
// applies on both branches; the example term only on margin violation.
LinearModel pegasos_update(const LinearModel& m, const LabeledExample& ex, double lambda);

// Constant-rate Adaline step: w + eta (y - <w,x>) x.
LinearModel adaline_update(const LinearModel& m, const LabeledExample& ex, double eta);

// Componentwise mean of the weights; age is the max of the two ages.
LinearModel merge(const LinearModel& a, const LinearModel& b);

// sign(<w,x>) with sign(0) = +1.
int predict(const LinearModel& m, const LabeledExample& x);
int predict(std::span<const double> w, const LabeledExample& x);

// Majority vote over a model cache; ties resolve to +1.
int voted_predict(std::span<const LinearModel> cache, const LabeledExample& x);

// sign of the mean inner product; equals predict() on the averaged model.
int weighted_vote(std::span<const std::vector<double>> models, const LabeledExample& x);

}  // namespace gossip
