#pragma once

#include <cstdint>
#include <random>

namespace hyperperc {

// splitmix64 finalizer; used to derive statistically independent per-run
// seeds from a master seed without consuming the master stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x51ed2701ULL));
}

// Seeded random source. All sampling in the library goes through this
// wrapper so that output is reproducible for a fixed seed within a build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform double in [0, 1)
  double uniform01() { return (gen_() >> 11) * (1.0 / 9007199254740992.0); }

  // uniform integer in [0, n); n >= 1
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double prob) { return uniform01() < prob; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hyperperc
