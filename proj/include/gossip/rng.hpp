#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace gossip {

// All randomness in a run is drawn from named sub-streams derived from the
// master seed. std::mt19937_64 is bit-exact across platforms; the standard
// *distributions* are not, so the helpers below implement the draws directly.
enum class RngStreamId : std::uint64_t {
  DataShuffle = 1,
  Network = 2,
  Churn = 3,
  Protocol = 4,
  Evaluation = 5,
  Baseline = 6,
  Reference = 7,  // w* solver
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class RngStream {
 public:
  RngStream() : RngStream(0) {}
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}
  RngStream(std::uint64_t master_seed, RngStreamId id)
      : RngStream(splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(id)))) {}

  // Independent child stream (e.g. one per baseline model). Derived from the
  // construction seed only; does not consume or depend on parent state.
  RngStream child(std::uint64_t index) const {
    return RngStream(splitmix64(seed_ ^ splitmix64(index + 0x51ed2701ULL)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n). Rejection sampling keeps the draw unbiased and portable.
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(uniform_index(span));
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Box-Muller; one fresh pair per call so the stream layout stays simple.
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace gossip
