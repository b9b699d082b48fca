#pragma once

#include <cstdint>

namespace hopf {

/// splitmix64: tiny, fast, and fully specified, so seeded runs are
/// bit-identical across platforms and standard libraries (std::mt19937
/// would be too, but its distributions are not).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform on [lo, hi] by multiply-shift; lo <= hi required.  The modulo
  /// bias of the naive approach is avoided, determinism is kept.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t word = next();
    const unsigned __int128 product =
        static_cast<unsigned __int128>(word) * static_cast<unsigned __int128>(span);
    return lo + static_cast<long>(product >> 64);
  }

private:
  std::uint64_t state_;
};

/// Independent per-item stream: mixes the index into the seed through one
/// splitmix step, so sample i's stream does not depend on how many draws
/// sample i-1 made.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return mix.next();
}

}  // namespace hopf
