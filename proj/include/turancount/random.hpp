#pragma once

#include <cstdint>
#include <random>

namespace turancount {

// Seeded generator with distribution code of our own, so a seed gives the
// same stream on every standard library.
class rng {
public:
  explicit rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound)
  {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      std::uint64_t x = engine_();
      if (x < limit)
        return x % bound;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

} // namespace turancount
