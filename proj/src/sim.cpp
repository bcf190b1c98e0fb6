#include "gossip/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace gossip {

void Engine::schedule(Event e) {
  if (e.at < now_) throw std::invalid_argument("cannot schedule an event in the past");
  e.seq = next_seq_++;
  queue_.push(std::move(e));
}

void Engine::send(NodeId from, NodeId to, const LinearModel& model) {
  (void)from;
  ++summary_.msgs_sent;
  if (net_.drop_prob > 0.0 && net_rng_.uniform01() < net_.drop_prob) {
    ++summary_.msgs_dropped_network;
    return;
  }
  const auto lo = static_cast<std::int64_t>(std::llround(net_.delay_min_factor * static_cast<double>(delta_)));
  const auto hi = static_cast<std::int64_t>(std::llround(net_.delay_max_factor * static_cast<double>(delta_)));
  const auto delay = static_cast<SimTime>((hi > lo) ? net_rng_.uniform_int(lo, hi) : lo);

  Event e;
  e.at = now_ + delay;
  e.kind = EventKind::Deliver;
  e.node = to;
  e.payload = model;  // copy: later sender-side mutation cannot reach the wire
  schedule(std::move(e));
}

RunSummary Engine::run(SimTime until, const Handler& handler) {
  while (!queue_.empty() && queue_.top().at <= until) {
    Event e = queue_.top();
    queue_.pop();
    now_ = e.at;
    ++summary_.events_processed;
    if (e.kind == EventKind::Deliver) ++summary_.msgs_delivered;
    handler(e);
  }
  if (now_ < until) now_ = until;
  return summary_;
}

std::uint64_t Engine::in_flight() const {
  // Only Deliver events can remain queued past the horizon; ticks and churn
  // transitions are bookkeeping, not messages.
  auto copy = queue_;
  std::uint64_t n = 0;
  while (!copy.empty()) {
    if (copy.top().kind == EventKind::Deliver) ++n;
    copy.pop();
  }
  return n;
}

Event churn_step(NodeId node, const ChurnModel& churn, RngStream& rng, SimTime now, bool went_online) {
  if (churn.mode != ChurnMode::Lognormal) throw std::invalid_argument("churn_step: churn disabled");
  Event e;
  e.node = node;
  const double session = rng.lognormal(churn.mu, churn.sigma);
  if (went_online) {
    e.kind = EventKind::ChurnOff;
    e.at = now + static_cast<SimTime>(std::llround(session));
  } else {
    const double p = churn.online_target;
    const double offline = session * (1.0 - p) / p;
    e.kind = EventKind::ChurnOn;
    e.at = now + static_cast<SimTime>(std::llround(offline));
  }
  return e;
}

}  // namespace gossip
