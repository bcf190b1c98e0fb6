#pragma once

#include <optional>
#include <vector>

#include "gossip/rng.hpp"
#include "gossip/sim.hpp"

namespace gossip {

enum class SamplerKind : std::uint8_t { Uniform, Matching };

// Uniform over online \ {self}; empty optional when no eligible target.
std::optional<NodeId> sample_uniform(NodeId self, const std::vector<NodeId>& online, RngStream& rng);

// Seeded shuffle paired up: (a,b) yields both a->b and b->a so every matched
// peer sends and receives exactly once. An odd leftover node idles this cycle.
std::vector<std::pair<NodeId, NodeId>> perfect_matching(const std::vector<NodeId>& online,
                                                        RngStream& rng);

}  // namespace gossip
