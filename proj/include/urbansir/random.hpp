#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace urbansir {

using Rng = std::mt19937_64;

// Stream families. Every random draw in the pipeline comes from a stream keyed
// by (master seed, stage, ...), so results do not depend on execution order.
enum class Stage : std::uint64_t {
  Population = 1,
  Fitness = 2,
  Households = 3,
  Acquaintances = 4,
  Ensemble = 5,
  Scan = 6,
  Placement = 7,
  Diagnostics = 8,
  NetworkInstance = 9,
};

constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Hashes a master seed and a key tuple into a stream seed. Each key is folded
/// together with its position, so (a, b) and (b, a) give different streams.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys);

inline std::uint64_t derive_seed(std::uint64_t master, Stage stage,
                                 std::initializer_list<std::uint64_t> keys = {}) {
  std::uint64_t h = derive_seed(master, {static_cast<std::uint64_t>(stage)});
  return keys.size() == 0 ? h : derive_seed(h, keys);
}

inline Rng make_stream(std::uint64_t master, Stage stage,
                       std::initializer_list<std::uint64_t> keys = {}) {
  return Rng(derive_seed(master, stage, keys));
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline bool bernoulli(Rng& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return uniform01(rng) < p;
}

/// Skips over a sequence of independent Bernoulli(p) trials: each call returns
/// the number of failures before the next success.
class GeometricSkipper {
 public:
  explicit GeometricSkipper(double p) : p_(p), log_q_(p < 1.0 ? std::log1p(-p) : 0.0) {}

  /// Returns UINT64_MAX when p == 0 (never succeeds).
  std::uint64_t next(Rng& rng) const {
    if (p_ >= 1.0) return 0;
    if (p_ <= 0.0) return UINT64_MAX;
    // 1 - U lies in (0, 1], so the logarithm is finite.
    const double u = 1.0 - uniform01(rng);
    const double k = std::floor(std::log(u) / log_q_);
    return k >= 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(k);
  }

 private:
  double p_;
  double log_q_;
};

}  // namespace urbansir
