#include "gossip/theory.hpp"

#include <cmath>
#include <stdexcept>

#include "gossip/rng.hpp"

namespace gossip {

std::vector<double> compute_w_star(const Dataset& train, double lambda, std::int64_t iterations,
                                   std::uint64_t seed) {
  if (train.examples.empty()) throw std::invalid_argument("compute_w_star: empty training set");
  if (lambda <= 0.0) throw std::invalid_argument("compute_w_star: lambda must be positive");

  RngStream rng(seed, RngStreamId::Reference);
  const std::size_t n = train.size();
  std::vector<double> w(train.dim, 0.0);
  std::vector<double> avg(train.dim, 0.0);
  std::vector<double> best = w;
  double best_obj = global_objective(best, train, lambda);
  const std::int64_t check_every = iterations > 200 ? iterations / 200 : 1;

  for (std::int64_t k = 1; k <= iterations; ++k) {
    const auto& ex = train.examples[rng.uniform_index(n)];
    const double eta = 1.0 / (lambda * static_cast<double>(k));
    const double scale = 1.0 - eta * lambda;
    const bool violated = ex.label * dot(w, ex) < 1.0;
    for (double& v : w) v *= scale;
    if (violated) {
      const double coef = eta * ex.label;
      for (const auto& [idx, val] : ex.features) w[idx] += coef * val;
    }
    // Running average of the iterates; the averaged sequence settles faster.
    const double inv_k = 1.0 / static_cast<double>(k);
    for (std::size_t i = 0; i < w.size(); ++i) avg[i] += (w[i] - avg[i]) * inv_k;

    if (k % check_every == 0 || k == iterations) {
      const double obj_w = global_objective(w, train, lambda);
      if (obj_w < best_obj) {
        best_obj = obj_w;
        best = w;
      }
      const double obj_avg = global_objective(avg, train, lambda);
      if (obj_avg < best_obj) {
        best_obj = obj_avg;
        best = avg;
      }
    }
  }
  return best;
}

double max_example_norm(const Dataset& train) {
  double max_norm = 0.0;
  for (const auto& ex : train.examples) {
    double sq = 0.0;
    for (const auto& [idx, val] : ex.features) sq += val * val;
    if (sq > max_norm) max_norm = sq;
  }
  return std::sqrt(max_norm);
}

double estimate_G(const Dataset& train, double lambda, double w_radius) {
  if (train.examples.empty()) throw std::invalid_argument("estimate_G: empty training set");
  return lambda * w_radius + max_example_norm(train);
}

RegretProbe probe_merge_update(const LinearModel& a, const LinearModel& b,
                               const LabeledExample& example, const TheoryContext& ctx) {
  if (!a.probe || !b.probe)
    throw std::invalid_argument("probe_merge_update: ancestors carry no probes");
  if (a.w.size() != ctx.w_star.size() || b.w.size() != ctx.w_star.size())
    throw std::invalid_argument("probe_merge_update: dimension mismatch with w_star");

  double dist_a = 0.0, dist_b = 0.0;
  std::vector<double> avg(a.w.size());
  for (std::size_t i = 0; i < a.w.size(); ++i) {
    const double da = a.w[i] - ctx.w_star[i];
    const double db = b.w[i] - ctx.w_star[i];
    dist_a += da * da;
    dist_b += db * db;
    avg[i] = (a.w[i] + b.w[i]) / 2.0;
  }
  const RegretProbe& far = dist_b > dist_a ? *b.probe : *a.probe;  // ties go to a

  const double term =
      local_objective(avg, example, ctx.lambda) - local_objective(ctx.w_star, example, ctx.lambda);
  return RegretProbe{far.path_len + 1, far.regret_sum + term};
}

BoundCheck check_bound(const RegretProbe& probe, const TheoryContext& ctx) {
  if (probe.path_len < 1) throw std::invalid_argument("check_bound: empty path");
  const auto t = static_cast<double>(probe.path_len);
  BoundCheck out;
  out.lhs = probe.regret_sum / t;
  out.rhs = ctx.g_bound * ctx.g_bound * (std::log(t) + 1.0) / (2.0 * ctx.lambda * t);
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace gossip
