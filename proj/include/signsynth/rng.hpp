#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace signsynth {

// 64-bit FNV-1a, used for config hashes and per-frame seed derivation.
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// One global seed fans out to per-frame seeds so frame order / parallelism
// never changes the result of a run.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view key) {
  return splitmix64(global_seed ^ fnv1a64(key));
}

// Deterministic random stream. mt19937_64 output is standardized; the
// distribution transforms here are spelled out so results do not depend on
// the standard library's distribution implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi], inclusive; rejection keeps it unbiased
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t n = static_cast<std::uint64_t>(hi - lo) + 1;
    if (n == 0) return static_cast<std::int64_t>(gen_());  // full range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % n);
  }

  // standard normal via Box-Muller, one cached spare
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  RandomStream fork(std::string_view key) { return RandomStream(splitmix64(gen_() ^ fnv1a64(key))); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace signsynth
