#include "gossip/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace gossip {

const char* const kCsvHeader =
    "run_id,seed,cycle,mean_err,mean_err_voted,avg_cosine,msgs_sent,msgs_delivered,msgs_dropped,"
    "online_fraction";
const char* const kCsvProbeHeader = ",probe_t,probe_lhs,probe_rhs,probe_holds";

double zero_one_error(std::span<const double> w, const Dataset& test) {
  if (test.examples.empty()) throw std::invalid_argument("zero_one_error: empty test set");
  std::size_t wrong = 0;
  for (const auto& ex : test.examples) {
    if (predict(w, ex) != ex.label) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(test.size());
}

double zero_one_error(std::span<const LinearModel> models, const Dataset& test) {
  if (models.empty()) throw std::invalid_argument("zero_one_error: no models");
  double sum = 0.0;
  for (const auto& m : models) sum += zero_one_error(m.w, test);
  return sum / static_cast<double>(models.size());
}

std::vector<std::uint32_t> sample_panel(std::uint32_t n_nodes, std::uint32_t k, RngStream& rng) {
  if (k > n_nodes) throw std::invalid_argument("evaluation panel larger than node count");
  std::vector<std::uint32_t> ids(n_nodes);
  std::iota(ids.begin(), ids.end(), 0);
  // Partial Fisher-Yates: the first k entries are a uniform sample.
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::uint32_t>(rng.uniform_index(n_nodes - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  std::sort(ids.begin(), ids.end());
  return ids;
}

double eval_peers(std::span<const NodeState> nodes, std::span<const std::uint32_t> panel,
                  const Dataset& test, bool voted) {
  if (panel.empty()) throw std::invalid_argument("eval_peers: empty panel");
  if (test.examples.empty()) throw std::invalid_argument("eval_peers: empty test set");
  double sum = 0.0;
  for (std::uint32_t id : panel) {
    const NodeState& node = nodes[id];
    std::size_t wrong = 0;
    for (const auto& ex : test.examples) {
      if (local_prediction(node, ex, voted) != ex.label) ++wrong;
    }
    sum += static_cast<double>(wrong) / static_cast<double>(test.size());
  }
  return sum / static_cast<double>(panel.size());
}

double eval_peers(std::span<const NodeState> nodes, std::uint32_t k, const Dataset& test,
                  bool voted, RngStream& rng) {
  const auto panel = sample_panel(static_cast<std::uint32_t>(nodes.size()), k, rng);
  return eval_peers(nodes, panel, test, voted);
}

namespace {

double cosine(std::span<const double> a, std::span<const double> b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (na * nb);
}

}  // namespace

double avg_pairwise_cosine(std::span<const std::vector<double>> models, std::uint64_t max_pairs,
                           RngStream& rng) {
  const std::uint64_t n = models.size();
  if (n < 2) throw std::invalid_argument("avg_pairwise_cosine: need at least two models");
  const std::uint64_t total_pairs = n * (n - 1) / 2;
  double sum = 0.0;
  if (total_pairs <= max_pairs) {
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = i + 1; j < n; ++j) sum += cosine(models[i], models[j]);
    return sum / static_cast<double>(total_pairs);
  }
  // Sample distinct pairs uniformly; rejection on duplicates.
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(max_pairs * 2);
  std::uint64_t drawn = 0;
  while (drawn < max_pairs) {
    const std::uint64_t i = rng.uniform_index(n);
    const std::uint64_t j = rng.uniform_index(n);
    if (i == j) continue;
    const std::uint64_t key = i < j ? i * n + j : j * n + i;
    if (!seen.insert(key).second) continue;
    sum += cosine(models[i], models[j]);
    ++drawn;
  }
  return sum / static_cast<double>(max_pairs);
}

std::string format_g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string csv_row(const std::string& run_id, std::uint64_t seed, const MetricSnapshot& snap) {
  std::string row = run_id;
  row += ',';
  row += std::to_string(seed);
  row += ',';
  row += std::to_string(snap.cycle);
  row += ',';
  row += format_g6(snap.mean_err);
  row += ',';
  row += format_g6(snap.mean_err_voted);
  row += ',';
  row += format_g6(snap.avg_cosine);
  row += ',';
  row += std::to_string(snap.msgs_sent);
  row += ',';
  row += std::to_string(snap.msgs_delivered);
  row += ',';
  row += std::to_string(snap.msgs_dropped);
  row += ',';
  row += format_g6(snap.online_fraction);
  if (snap.probe) {
    row += ',';
    row += std::to_string(snap.probe->t);
    row += ',';
    row += format_g6(snap.probe->lhs);
    row += ',';
    row += format_g6(snap.probe->rhs);
    row += ',';
    row += snap.probe->holds ? '1' : '0';
  }
  return row;
}

}  // namespace gossip
