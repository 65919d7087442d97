#pragma once

#include <cstdint>
#include <string_view>

// Deterministic, platform-independent randomness.
//
// Generator identity: SplitMix64 (Steele, Lea, Flood 2014), the mixer behind
// java.util.SplittableRandom. Pure 64-bit integer arithmetic, so sequences
// reproduce bit-exactly across compilers and platforms. Doubles use the top
// 53 bits, uniform on [0, 1).
//
// Sub-streams are derived per (seed, purpose-label) so that e.g. arrivals,
// correctness and costs of one episode come from independent streams.

namespace hil {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_double() {  // [0, 1), 53-bit resolution
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// FNV-1a over the label, folded into the master seed through one SplitMix64
// step. Distinct labels give unrelated streams for the same master seed.
inline std::uint64_t substream_seed(std::uint64_t master,
                                    std::string_view purpose) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : purpose) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001B3ULL;
  }
  SplitMix64 mix(master ^ h);
  return mix.next_u64();
}

}  // namespace hil
