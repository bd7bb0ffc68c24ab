#ifndef RAAG_RNG_HPP
#define RAAG_RNG_HPP

#include <cstdint>

namespace raag {

// Fixed linear congruential generator (Knuth MMIX constants) so that every
// sampling command is reproducible from its seed across platforms.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform in [0, n); uses the high bits.
  std::uint64_t below(std::uint64_t n) { return (next() >> 16) % n; }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240501;

}  // namespace raag

#endif
