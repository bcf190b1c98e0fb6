#include "gossip/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gossip/rng.hpp"

namespace gossip {

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

// Shortest round-trip decimal form, locale independent.
std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("failed to format value");
  return std::string(buf, ptr);
}

}  // namespace

Dataset load_svmlight(const std::string& path, std::uint32_t dim_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);

  Dataset data;
  data.name = path;
  std::uint32_t max_index = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    LabeledExample ex;
    if (tok == "+1" || tok == "1") {
      ex.label = 1;
    } else if (tok == "-1" || tok == "0") {
      ex.label = -1;
    } else {
      parse_fail(path, line_no, "bad label '" + tok + "'");
    }

    std::uint32_t prev_index = 0;
    bool first = true;
    while (ss >> tok) {
      if (tok[0] == '#') break;
      const auto colon = tok.find(':');
      if (colon == std::string::npos) parse_fail(path, line_no, "expected idx:val, got '" + tok + "'");
      std::uint64_t idx1 = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + colon, idx1);
      if (ec != std::errc{} || p != tok.data() + colon || idx1 == 0)
        parse_fail(path, line_no, "bad feature index in '" + tok + "' (indices are 1-based)");
      double val = 0.0;
      try {
        std::size_t used = 0;
        val = std::stod(tok.substr(colon + 1), &used);
        if (used != tok.size() - colon - 1) throw std::invalid_argument("trailing junk");
      } catch (const std::exception&) {
        parse_fail(path, line_no, "bad feature value in '" + tok + "'");
      }
      if (!std::isfinite(val)) parse_fail(path, line_no, "non-finite feature value");
      const auto idx = static_cast<std::uint32_t>(idx1 - 1);  // to 0-based
      if (!first && idx <= prev_index)
        parse_fail(path, line_no, "feature indices must be strictly increasing");
      first = false;
      prev_index = idx;
      max_index = std::max(max_index, idx);
      if (val != 0.0) ex.features.emplace_back(idx, val);
    }
    data.examples.push_back(std::move(ex));
  }
  if (data.examples.empty()) throw std::runtime_error("dataset file has no examples: " + path);

  data.dim = dim_override != 0 ? dim_override : max_index + 1;
  for (const auto& ex : data.examples) {
    if (!ex.features.empty() && ex.features.back().first >= data.dim)
      throw std::runtime_error("feature index exceeds requested dimension in " + path);
  }
  return data;
}

void save_svmlight(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path);
  for (const auto& ex : data.examples) {
    out << (ex.label > 0 ? "+1" : "-1");
    for (const auto& [idx, val] : ex.features) {
      out << ' ' << (idx + 1) << ':' << format_value(val);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::pair<Dataset, Dataset> split(const Dataset& data, const SplitSpec& spec) {
  if (spec.train_size == 0 || spec.test_size == 0)
    throw std::invalid_argument("split sizes must be positive");
  if (spec.train_size + spec.test_size > data.size())
    throw std::invalid_argument("split sizes exceed dataset size");

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  RngStream rng(spec.seed, RngStreamId::DataShuffle);
  rng.shuffle(order);

  Dataset train{{}, data.dim, data.name + ":train"};
  Dataset test{{}, data.dim, data.name + ":test"};
  train.examples.reserve(spec.train_size);
  test.examples.reserve(spec.test_size);
  for (std::size_t i = 0; i < spec.train_size; ++i) train.examples.push_back(data.examples[order[i]]);
  for (std::size_t i = 0; i < spec.test_size; ++i)
    test.examples.push_back(data.examples[order[spec.train_size + i]]);
  return {std::move(train), std::move(test)};
}

std::pair<Dataset, std::vector<std::uint32_t>> pearson_select(const Dataset& data, std::uint32_t k) {
  if (k == 0 || k > data.dim) throw std::invalid_argument("pearson_select: k out of range");
  const auto n = static_cast<double>(data.size());

  double label_sum = 0.0;
  for (const auto& ex : data.examples) label_sum += ex.label;
  const double label_mean = label_sum / n;
  double label_var = 0.0;
  for (const auto& ex : data.examples) {
    const double d = ex.label - label_mean;
    label_var += d * d;
  }
  label_var /= n;
  if (label_var == 0.0)
    throw std::invalid_argument("pearson_select: dataset contains a single class");

  std::vector<double> sum(data.dim, 0.0), sum_sq(data.dim, 0.0), sum_xy(data.dim, 0.0);
  for (const auto& ex : data.examples) {
    for (const auto& [idx, val] : ex.features) {
      sum[idx] += val;
      sum_sq[idx] += val * val;
      sum_xy[idx] += val * ex.label;
    }
  }

  std::vector<double> abs_r(data.dim, 0.0);
  for (std::uint32_t j = 0; j < data.dim; ++j) {
    const double mean = sum[j] / n;
    const double var = sum_sq[j] / n - mean * mean;
    if (var <= 0.0) continue;  // constant column: r = 0 by convention
    const double cov = sum_xy[j] / n - mean * label_mean;
    abs_r[j] = std::abs(cov / std::sqrt(var * label_var));
  }

  std::vector<std::uint32_t> order(data.dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (abs_r[a] != abs_r[b]) return abs_r[a] > abs_r[b];
    return a < b;
  });
  std::vector<std::uint32_t> kept(order.begin(), order.begin() + k);
  std::sort(kept.begin(), kept.end());

  std::vector<std::int64_t> remap(data.dim, -1);
  for (std::uint32_t new_idx = 0; new_idx < k; ++new_idx) remap[kept[new_idx]] = new_idx;

  Dataset out{{}, k, data.name + ":top" + std::to_string(k)};
  out.examples.reserve(data.size());
  for (const auto& ex : data.examples) {
    LabeledExample mapped;
    mapped.label = ex.label;
    for (const auto& [idx, val] : ex.features) {
      if (remap[idx] >= 0) mapped.features.emplace_back(static_cast<std::uint32_t>(remap[idx]), val);
    }
    out.examples.push_back(std::move(mapped));
  }
  return {std::move(out), std::move(kept)};
}

namespace {

Dataset apply_standardize(const Dataset& data, const FeatureStats& stats) {
  Dataset out{{}, data.dim, data.name};
  out.examples.reserve(data.size());
  for (const auto& ex : data.examples) {
    LabeledExample mapped;
    mapped.label = ex.label;
    mapped.features.reserve(data.dim);
    std::size_t pos = 0;
    for (std::uint32_t j = 0; j < data.dim; ++j) {
      double v = 0.0;
      if (pos < ex.features.size() && ex.features[pos].first == j) v = ex.features[pos++].second;
      if (stats.stddev[j] > 0.0) v = (v - stats.mean[j]) / stats.stddev[j];
      if (v != 0.0) mapped.features.emplace_back(j, v);
    }
    out.examples.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace

StandardizeResult standardize(const Dataset& train, const Dataset& test) {
  if (train.examples.empty()) throw std::invalid_argument("standardize: empty training set");
  const auto n = static_cast<double>(train.size());
  FeatureStats stats;
  stats.mean.assign(train.dim, 0.0);
  stats.stddev.assign(train.dim, 0.0);

  std::vector<double> sum(train.dim, 0.0), sum_sq(train.dim, 0.0);
  for (const auto& ex : train.examples) {
    for (const auto& [idx, val] : ex.features) {
      sum[idx] += val;
      sum_sq[idx] += val * val;
    }
  }
  for (std::uint32_t j = 0; j < train.dim; ++j) {
    stats.mean[j] = sum[j] / n;
    const double var = sum_sq[j] / n - stats.mean[j] * stats.mean[j];
    stats.stddev[j] = var > 0.0 ? std::sqrt(var) : 0.0;
  }

  return {apply_standardize(train, stats), apply_standardize(test, stats), std::move(stats)};
}

Dataset append_bias_feature(const Dataset& data) {
  Dataset out{{}, data.dim + 1, data.name};
  out.examples.reserve(data.size());
  for (const auto& ex : data.examples) {
    LabeledExample mapped = ex;
    mapped.features.emplace_back(data.dim, 1.0);
    out.examples.push_back(std::move(mapped));
  }
  return out;
}

std::string kept_indices_csv(const std::vector<std::uint32_t>& kept) {
  std::string line;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(kept[i]);
  }
  line += '\n';
  return line;
}

}  // namespace gossip
