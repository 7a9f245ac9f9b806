#include "sri/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sri/errors.hpp"

namespace sri {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 1)));
}

double Rng::uniform() {
  // 53-bit mantissa in [0, 1)
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t Rng::uniform_int(std::int64_t n) {
  if (n <= 0) throw InternalError("uniform_int: n must be positive");
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::int64_t>(x % un);
}

int Rng::categorical(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w))
      throw InternalError("categorical: invalid weight");
    total += w;
  }
  if (!(total > 0.0)) throw InternalError("categorical: all weights zero");
  const double u = uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size() - 1);
}

int Rng::categorical_log(std::span<const double> log_weights) {
  if (log_weights.empty()) throw InternalError("categorical_log: empty span");
  const double m = *std::max_element(log_weights.begin(), log_weights.end());
  std::vector<double> w(log_weights.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(log_weights[i] - m);
  return categorical(w);
}

}  // namespace sri
