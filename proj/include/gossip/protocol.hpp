#pragma once

#include <cstdint>
#include <vector>

#include "gossip/linear_model.hpp"

namespace gossip {

enum class Variant : std::uint8_t { RW, MU, UM };
enum class Learner : std::uint8_t { Pegasos, Adaline };

struct ProtocolVariant {
  Variant variant = Variant::MU;
  Learner learner = Learner::Pegasos;
};

// One peer. The example never moves; models do.
struct NodeState {
  std::uint32_t id = 0;
  LabeledExample example;
  std::int64_t example_index = -1;  // index into the training set (lineage bookkeeping)
  LinearModel last_model;
  std::vector<LinearModel> model_cache;  // FIFO by arrival, newest at the back
  bool online = true;
};

void init_node(NodeState& node, std::uint32_t dim);

// The on-receive model creation rule:
//   RW: update(received)
//   MU: update(merge(received, cached_latest))
//   UM: merge(update(received), update(cached_latest)), same example for both
LinearModel create_model(const ProtocolVariant& pv, const LinearModel& received,
                         const LinearModel& cached_latest, const LabeledExample& example,
                         const HyperParams& hp);

// Applies create_model and stores the result (last_model + bounded cache).
void on_receive(NodeState& node, const LinearModel& received, const ProtocolVariant& pv,
                const HyperParams& hp, std::size_t cache_size);

// voted = false: freshest model; voted = true: majority over the cache.
int local_prediction(const NodeState& node, const LabeledExample& x, bool voted);

}  // namespace gossip
