#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "gossip/linear_model.hpp"
#include "gossip/rng.hpp"

namespace gossip {

using SimTime = std::uint64_t;
using NodeId = std::uint32_t;

enum class EventKind : std::uint8_t { CycleTick, Deliver, ChurnOn, ChurnOff, MetricSnapshot };

struct Event {
  SimTime at = 0;
  std::uint64_t seq = 0;  // tie-breaker: events at equal times pop in scheduling order
  EventKind kind = EventKind::CycleTick;
  NodeId node = 0;
  std::uint32_t cycle = 0;
  LinearModel payload;  // Deliver only; copied at send time (value semantics)
};

// Message loss and delay. Delays are drawn as integer ticks uniformly from
// [delay_min_factor * delta, delay_max_factor * delta].
struct NetworkModel {
  double drop_prob = 0.0;
  double delay_min_factor = 0.0;
  double delay_max_factor = 0.0;
};

enum class ChurnMode : std::uint8_t { None, Lognormal };

// Online session lengths are lognormal(mu, sigma) in ticks; offline lengths
// are scaled so the long-run online fraction approaches online_target.
struct ChurnModel {
  ChurnMode mode = ChurnMode::None;
  double mu = 0.0;
  double sigma = 0.5;
  double online_target = 0.9;
};

struct RunSummary {
  std::uint64_t events_processed = 0;
  std::uint64_t msgs_sent = 0;
  std::uint64_t msgs_delivered = 0;
  std::uint64_t msgs_dropped_network = 0;
  std::uint64_t msgs_dropped_offline = 0;
  std::uint64_t sends_skipped = 0;  // no eligible target that cycle

  std::uint64_t msgs_dropped() const { return msgs_dropped_network + msgs_dropped_offline; }
};

// Deterministic discrete-event kernel. Single-threaded by contract; the whole
// simulation is a pure function of (config, seed).
class Engine {
 public:
  Engine(SimTime delta_ticks, NetworkModel net, RngStream net_rng)
      : delta_(delta_ticks), net_(net), net_rng_(net_rng) {}

  SimTime now() const { return now_; }
  SimTime delta() const { return delta_; }
  bool empty() const { return queue_.empty(); }
  std::size_t pending() const { return queue_.size(); }

  void schedule(Event e);

  // Applies the failure model: either counts a drop or schedules a Deliver.
  void send(NodeId from, NodeId to, const LinearModel& model);

  // Reclassifies a popped Deliver whose target turned out to be offline.
  void count_offline_drop() {
    --summary_.msgs_delivered;
    ++summary_.msgs_dropped_offline;
  }
  void count_skipped_send() { ++summary_.sends_skipped; }

  // Processes events with at <= until in (at, seq) order. Events scheduled
  // past `until` stay queued (delayed messages may remain in flight).
  using Handler = std::function<void(const Event&)>;
  RunSummary run(SimTime until, const Handler& handler);

  const RunSummary& summary() const { return summary_; }
  std::uint64_t in_flight() const;

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  SimTime delta_;
  NetworkModel net_;
  RngStream net_rng_;
  SimTime now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  RunSummary summary_;
};

// Schedules the next churn transition for a node that just changed state.
// `went_online` says which transition was just processed.
Event churn_step(NodeId node, const ChurnModel& churn, RngStream& rng, SimTime now, bool went_online);

}  // namespace gossip
