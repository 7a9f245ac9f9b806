#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace sri {

// Seeded random source. All draws are derived from raw mt19937_64 outputs
// (never from std:: distributions, whose sequences are implementation
// defined), so identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent deterministic stream, e.g. one per chain or per frame.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

  // uniform double in [0, 1)
  double uniform();

  // uniform integer in [0, n)
  std::int64_t uniform_int(std::int64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  // index sampled proportionally to non-negative weights
  int categorical(std::span<const double> weights);

  // index sampled proportionally to exp(log_weights), stable for large spans
  int categorical_log(std::span<const double> log_weights);

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace sri
