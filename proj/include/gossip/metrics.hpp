#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gossip/linear_model.hpp"
#include "gossip/protocol.hpp"
#include "gossip/rng.hpp"

namespace gossip {

struct ProbeSnapshot {
  std::int64_t t = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

struct MetricSnapshot {
  std::uint32_t cycle = 0;
  double mean_err = 0.0;
  double mean_err_voted = 0.0;
  double avg_cosine = 0.0;
  std::uint64_t msgs_sent = 0;
  std::uint64_t msgs_delivered = 0;
  std::uint64_t msgs_dropped = 0;
  double online_fraction = 1.0;
  std::optional<ProbeSnapshot> probe;
};

// Fraction of misclassified test examples, averaged over the given models.
double zero_one_error(std::span<const LinearModel> models, const Dataset& test);
double zero_one_error(std::span<const double> w, const Dataset& test);

// Fixed evaluation panel: k distinct node ids, sampled once per run and then
// kept in id order so reductions are deterministic.
std::vector<std::uint32_t> sample_panel(std::uint32_t n_nodes, std::uint32_t k, RngStream& rng);

double eval_peers(std::span<const NodeState> nodes, std::span<const std::uint32_t> panel,
                  const Dataset& test, bool voted);

// Convenience form matching the one-shot sampling contract.
double eval_peers(std::span<const NodeState> nodes, std::uint32_t k, const Dataset& test,
                  bool voted, RngStream& rng);

// Mean cosine similarity over model pairs; exact when the pair count fits in
// max_pairs, otherwise over max_pairs distinct sampled pairs. Zero-norm
// vectors contribute cosine 0.
double avg_pairwise_cosine(std::span<const std::vector<double>> models, std::uint64_t max_pairs,
                           RngStream& rng);

extern const char* const kCsvHeader;       // schema without probe columns
extern const char* const kCsvProbeHeader;  // extra columns for instrumented runs

std::string format_g6(double v);  // 6 significant digits, locale independent

std::string csv_row(const std::string& run_id, std::uint64_t seed, const MetricSnapshot& snap);

}  // namespace gossip
