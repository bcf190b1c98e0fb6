#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gossip/protocol.hpp"
#include "gossip/sampler.hpp"
#include "gossip/sim.hpp"

namespace gossip {

enum class BaselineKind : std::uint8_t { None, Seq, WB1, WB2 };

// Full declarative description of one run. Field names double as the config
// file keys; unknown keys are rejected.
struct ExperimentConfig {
  std::string dataset_path;
  Variant protocol = Variant::MU;
  Learner learner = Learner::Pegasos;
  BaselineKind baseline = BaselineKind::None;
  std::uint32_t n_nodes = 0;
  std::uint32_t cycles = 0;
  std::uint64_t delta_ticks = 1000;
  double lambda = 1e-4;
  double eta_adaline = 0.01;
  std::uint32_t cache_size = 10;
  bool voted = false;
  SamplerKind peer_sampling = SamplerKind::Uniform;
  double drop_prob = 0.0;
  double delay_min_factor = 0.0;
  double delay_max_factor = 0.0;
  ChurnMode churn = ChurnMode::None;
  double churn_mu = -1.0;  // <0: default ln(100 * delta_ticks), resolved in validate()
  double churn_sigma = 0.5;
  double online_target = 0.9;
  std::uint32_t feature_select_k = 0;  // 0 = off
  bool standardize = false;
  bool add_bias = false;
  std::size_t train_size = 0;  // 0 = floor(0.9 n)
  std::size_t test_size = 0;   // 0 = remainder
  std::uint32_t eval_peers = 0;  // 0 = min(100, n_nodes)
  std::uint32_t eval_every = 10;
  bool instrument_regret = false;
  bool record_lineage = false;
  std::uint64_t max_pairs = 10000;
  std::int64_t w_star_iters = 1000000;
  std::uint64_t seed = 0;
  std::string run_id = "run";

  bool seed_set = false;  // seed is required; 0 is a legal value
};

// Parses the flat key=value format. Lines starting with '#' are comments.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Applies one "key=value" override (the CLI --set flag).
void apply_override(ExperimentConfig& cfg, const std::string& key_value);

// Range/consistency checks; resolves dependent defaults. Throws on violation.
void validate(ExperimentConfig& cfg);

std::string to_string(Variant v);
std::string to_string(Learner l);
std::string to_string(BaselineKind b);
std::string to_string(SamplerKind s);
std::string to_string(ChurnMode c);

}  // namespace gossip
