#ifndef FERMAT_RNG_HH
#define FERMAT_RNG_HH

#include <cstdint>

namespace fermat {

// SplitMix64: tiny, fully specified generator so that seeded runs are
// bit-identical across platforms (std distributions are not).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; n must be positive.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  // Derive an independent stream from this seed and a tag.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 mix(seed ^ (0x6a09e667f3bcc909ULL + tag * 0x9e3779b97f4a7c15ULL));
    mix.next();
    return mix;
  }

private:
  std::uint64_t state_;
};

}  // namespace fermat

#endif  // FERMAT_RNG_HH
