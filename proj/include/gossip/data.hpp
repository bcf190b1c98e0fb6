#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gossip {

class RngStream;

// One training example: sparse features (strictly increasing indices) and a
// label in {-1, +1}. Raw examples never leave the node they are assigned to.
struct LabeledExample {
  std::vector<std::pair<std::uint32_t, double>> features;
  int label = 1;
};

struct Dataset {
  std::vector<LabeledExample> examples;
  std::uint32_t dim = 0;
  std::string name;

  std::size_t size() const { return examples.size(); }
};

struct SplitSpec {
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::uint64_t seed = 0;
};

// Per-feature moments computed on a training set (dense interpretation:
// absent entries count as zero).
struct FeatureStats {
  std::vector<double> mean;
  std::vector<double> stddev;
};

// SVMlight-style text: "<label> <idx>:<val> ...", 1-based indices, labels
// {+1,1} -> +1 and {-1,0} -> -1. Lines starting with '#' are skipped.
// dim_override = 0 means infer dim as 1 + max index seen.
Dataset load_svmlight(const std::string& path, std::uint32_t dim_override = 0);
void save_svmlight(const Dataset& data, const std::string& path);

// Seeded shuffle, then partition into (train, test). Deterministic per spec.
std::pair<Dataset, Dataset> split(const Dataset& data, const SplitSpec& spec);

// Keeps the k features whose Pearson correlation with the label has the
// largest absolute value (ties to the lower index, zero-variance features
// score 0), remapped to indices 0..k-1. Returns the kept original indices.
std::pair<Dataset, std::vector<std::uint32_t>> pearson_select(const Dataset& data, std::uint32_t k);

// Mean/stddev from `train` applied to both sets; zero-variance features pass
// through unchanged.
struct StandardizeResult {
  Dataset train;
  Dataset test;
  FeatureStats stats;
};
StandardizeResult standardize(const Dataset& train, const Dataset& test);

// Appends a constant-1 feature to every example (bias-as-feature option).
Dataset append_bias_feature(const Dataset& data);

std::string kept_indices_csv(const std::vector<std::uint32_t>& kept);

}  // namespace gossip
