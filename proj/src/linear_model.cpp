#include "gossip/linear_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gossip {

namespace {

void check_dims(std::size_t wdim, const LabeledExample& ex) {
  if (!ex.features.empty() && ex.features.back().first >= wdim) {
    throw std::invalid_argument("example index " + std::to_string(ex.features.back().first) +
                                " out of range for model dimension " + std::to_string(wdim));
  }
}

void check_finite(const std::vector<double>& w, const char* where) {
  for (double v : w) {
    if (!std::isfinite(v)) {
      throw std::runtime_error(std::string("non-finite weight produced by ") + where);
    }
  }
}

}  // namespace

LinearModel init_model(std::uint32_t dim) {
  if (dim == 0) throw std::invalid_argument("model dimension must be at least 1");
  LinearModel m;
  m.w.assign(dim, 0.0);
  m.t = 0;
  return m;
}

double dot(std::span<const double> w, const LabeledExample& ex) {
  double s = 0.0;
  for (const auto& [idx, val] : ex.features) s += w[idx] * val;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> w) {
  double s = 0.0;
  for (double v : w) s += v * v;
  return std::sqrt(s);
}

double hinge_loss(std::span<const double> w, const LabeledExample& ex) {
  check_dims(w.size(), ex);
  const double margin = ex.label * dot(w, ex);
  return margin >= 1.0 ? 0.0 : 1.0 - margin;
}

double local_objective(std::span<const double> w, const LabeledExample& ex, double lambda) {
  double sq = 0.0;
  for (double v : w) sq += v * v;
  return 0.5 * lambda * sq + hinge_loss(w, ex);
}

double global_objective(std::span<const double> w, const Dataset& data, double lambda) {
  if (data.examples.empty()) throw std::invalid_argument("global_objective: empty dataset");
  double sq = 0.0;
  for (double v : w) sq += v * v;
  double loss = 0.0;
  for (const auto& ex : data.examples) loss += hinge_loss(w, ex);
  return 0.5 * lambda * sq + loss / static_cast<double>(data.examples.size());
}

LinearModel pegasos_update(const LinearModel& m, const LabeledExample& ex, double lambda) {
  check_dims(m.w.size(), ex);
  LinearModel out = m;
  out.t = m.t + 1;
  const double eta = 1.0 / (lambda * static_cast<double>(out.t));
  const double scale = 1.0 - eta * lambda;
  for (double& v : out.w) v *= scale;
  if (ex.label * dot(m.w, ex) < 1.0) {
    const double coef = eta * ex.label;
    for (const auto& [idx, val] : ex.features) out.w[idx] += coef * val;
  }
  check_finite(out.w, "pegasos_update");
  return out;
}

LinearModel adaline_update(const LinearModel& m, const LabeledExample& ex, double eta) {
  check_dims(m.w.size(), ex);
  LinearModel out = m;
  out.t = m.t + 1;
  const double coef = eta * (ex.label - dot(m.w, ex));
  for (const auto& [idx, val] : ex.features) out.w[idx] += coef * val;
  check_finite(out.w, "adaline_update");
  return out;
}

LinearModel merge(const LinearModel& a, const LinearModel& b) {
  if (a.w.size() != b.w.size()) throw std::invalid_argument("merge: dimension mismatch");
  LinearModel out;
  out.w.resize(a.w.size());
  for (std::size_t i = 0; i < a.w.size(); ++i) out.w[i] = (a.w[i] + b.w[i]) / 2.0;
  out.t = a.t > b.t ? a.t : b.t;
  check_finite(out.w, "merge");
  return out;
}

int predict(std::span<const double> w, const LabeledExample& x) {
  check_dims(w.size(), x);
  return dot(w, x) >= 0.0 ? 1 : -1;
}

int predict(const LinearModel& m, const LabeledExample& x) { return predict(m.w, x); }

int voted_predict(std::span<const LinearModel> cache, const LabeledExample& x) {
  if (cache.empty()) throw std::invalid_argument("voted_predict: empty model cache");
  std::size_t p_ratio = 0;
  for (const auto& m : cache) {
    if (dot(m.w, x) >= 0.0) ++p_ratio;
  }
  const double v = static_cast<double>(p_ratio) / static_cast<double>(cache.size()) - 0.5;
  return v >= 0.0 ? 1 : -1;
}

int weighted_vote(std::span<const std::vector<double>> models, const LabeledExample& x) {
  if (models.empty()) throw std::invalid_argument("weighted_vote: empty model collection");
  double sum = 0.0;
  for (const auto& w : models) sum += dot(w, x);
  return sum / static_cast<double>(models.size()) >= 0.0 ? 1 : -1;
}

}  // namespace gossip
