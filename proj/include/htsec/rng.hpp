#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace htsec {

// Deterministic stream derivation: every randomized computation owns a
// stream derived from (root seed, salt indices), so results do not depend
// on evaluation order or thread scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a = 0,
                              std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = seed;
  std::uint64_t out = splitmix64(s);
  s ^= a * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
  out ^= splitmix64(s);
  s ^= b * 0xda942042e4dd58b5ULL + 0x9e6c63d0876a9a35ULL;
  out ^= splitmix64(s);
  s ^= c * 0xca01f9dd51b143dfULL + 0x5851f42d4c957f2dULL;
  out ^= splitmix64(s);
  return out;
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  static RngStream derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0) {
    return RngStream(mix_seed(seed, a, b, c));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1); 53 significant bits, implementation-pinned.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // 1 with probability p1.
  int bernoulli(double p1) { return unit() < p1 ? 1 : 0; }

  // Inverse-CDF sample from an unnormalized nonnegative weight vector.
  int sample_weights(std::span<const double> w, double total) {
    if (!(total > 0)) throw std::invalid_argument("sample_weights: zero total");
    double u = unit() * total;
    double acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      acc += w[i];
      if (u < acc) return static_cast<int>(i);
    }
    // Fall through on rounding: last index with positive weight.
    for (std::size_t i = w.size(); i-- > 0;)
      if (w[i] > 0) return static_cast<int>(i);
    return static_cast<int>(w.size()) - 1;
  }

  int sample_pmf(std::span<const double> p) { return sample_weights(p, 1.0); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace htsec
