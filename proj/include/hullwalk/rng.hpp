#pragma once

#include <cmath>
#include <cstdint>

namespace hullwalk {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
// Any draw is addressable by (seed, stream, counter), so independent streams
// can be handed to workers and every sample is reproducible in isolation.
namespace detail {

struct PhiloxBlock {
  std::uint32_t x[4];
};

inline PhiloxBlock philox4x32_10(std::uint64_t counter, std::uint64_t stream,
                                 std::uint32_t key0, std::uint32_t key1) {
  std::uint32_t c0 = static_cast<std::uint32_t>(counter);
  std::uint32_t c1 = static_cast<std::uint32_t>(counter >> 32);
  std::uint32_t c2 = static_cast<std::uint32_t>(stream);
  std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);
  std::uint32_t k0 = key0, k1 = key1;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = 0xD2511F53ull * c0;
    const std::uint64_t p1 = 0xCD9E8D57ull * c2;
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c0 = hi1 ^ c1 ^ k0;
    c1 = lo1;
    c2 = hi0 ^ c3 ^ k1;
    c3 = lo0;
    k0 += 0x9E3779B9u;
    k1 += 0xBB67AE85u;
  }
  return PhiloxBlock{{c0, c1, c2, c3}};
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace detail

// Derives a child stream id; mixing is bijective-free but collision-resistant
// for the stream counts used here.
inline std::uint64_t substream(std::uint64_t base, std::uint64_t index) {
  return detail::splitmix64(base ^ detail::splitmix64(index));
}

// (seed, stream) pair identifying one RNG stream.
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  StreamKey derived(std::uint64_t index) const {
    return StreamKey{seed, substream(stream, index)};
  }
};

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        stream_(stream) {}

  explicit Rng(StreamKey key) : Rng(key.seed, key.stream) {}

  std::uint32_t next_u32() {
    if (pos_ == 4) {
      block_ = detail::philox4x32_10(counter_++, stream_, key0_, key1_);
      pos_ = 0;
    }
    return block_.x[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform in (0,1): 53-bit mantissa, zero mapped to the smallest step.
  double next_unit() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
  }

  double next_exponential() { return -std::log(next_unit()); }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(next_unit()));
    const double t = 6.283185307179586476925286766559 * next_unit();
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::uint32_t key0_, key1_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  detail::PhiloxBlock block_{};
  int pos_ = 4;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hullwalk
