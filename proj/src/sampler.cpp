#include "gossip/sampler.hpp"

namespace gossip {

std::optional<NodeId> sample_uniform(NodeId self, const std::vector<NodeId>& online, RngStream& rng) {
  std::size_t eligible = online.size();
  bool contains_self = false;
  for (NodeId id : online) {
    if (id == self) {
      contains_self = true;
      --eligible;
      break;
    }
  }
  if (eligible == 0) return std::nullopt;
  auto pick = static_cast<std::size_t>(rng.uniform_index(eligible));
  if (contains_self) {
    // Skip over self without biasing the draw.
    for (std::size_t i = 0; i < online.size(); ++i) {
      if (online[i] == self) continue;
      if (pick == 0) return online[i];
      --pick;
    }
    return std::nullopt;  // unreachable
  }
  return online[pick];
}

std::vector<std::pair<NodeId, NodeId>> perfect_matching(const std::vector<NodeId>& online,
                                                        RngStream& rng) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  if (online.size() < 2) return pairs;
  std::vector<NodeId> order = online;
  rng.shuffle(order);
  const std::size_t matched = order.size() - (order.size() % 2);  // last shuffled node idles if odd
  pairs.reserve(matched);
  for (std::size_t i = 0; i + 1 < matched; i += 2) {
    pairs.emplace_back(order[i], order[i + 1]);
    pairs.emplace_back(order[i + 1], order[i]);
  }
  return pairs;
}

}  // namespace gossip
