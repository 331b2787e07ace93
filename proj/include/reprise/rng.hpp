#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace reprise {

// Seeded random stream. Uniform/normal transforms are hand-rolled so a
// stream is reproducible bit-for-bit regardless of standard library
// distribution internals; every run artifact depends on this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  int uniform_int(int n) { return static_cast<int>(uniform() * n) % n; }

  // Box-Muller, no cached spare value: one call consumes exactly two draws.
  double normal(double mean, double stddev) {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 gen_;
};

// Derives an independent stream for a work item (replicate, episode, epoch).
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace reprise
