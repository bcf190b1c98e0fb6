#include "gossip/protocol.hpp"

#include <stdexcept>

namespace gossip {

void init_node(NodeState& node, std::uint32_t dim) {
  node.last_model = init_model(dim);
  node.model_cache.clear();
  node.model_cache.push_back(node.last_model);
  node.online = true;
}

LinearModel create_model(const ProtocolVariant& pv, const LinearModel& received,
                         const LinearModel& cached_latest, const LabeledExample& example,
                         const HyperParams& hp) {
  auto update = [&](const LinearModel& m) {
    return pv.learner == Learner::Pegasos ? pegasos_update(m, example, hp.lambda)
                                          : adaline_update(m, example, hp.eta_adaline);
  };
  switch (pv.variant) {
    case Variant::RW:
      return update(received);
    case Variant::MU:
      return update(merge(received, cached_latest));
    case Variant::UM:
      return merge(update(received), update(cached_latest));
  }
  throw std::logic_error("unknown protocol variant");
}

void on_receive(NodeState& node, const LinearModel& received, const ProtocolVariant& pv,
                const HyperParams& hp, std::size_t cache_size) {
  LinearModel created = create_model(pv, received, node.last_model, node.example, hp);
  node.last_model = created;
  node.model_cache.push_back(std::move(created));
  while (node.model_cache.size() > cache_size) node.model_cache.erase(node.model_cache.begin());
}

int local_prediction(const NodeState& node, const LabeledExample& x, bool voted) {
  if (!voted) return predict(node.last_model, x);
  return voted_predict(node.model_cache, x);
}

}  // namespace gossip
