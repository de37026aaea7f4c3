#pragma once

#include <cstdint>
#include <random>

namespace degsim {

// Seeded deterministic RNG. Bounded draws use rejection sampling on the
// raw mt19937_64 stream so the sequence is identical across standard
// library implementations (uniform_int_distribution is not portable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound); bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t r = eng_() & mask;
            if (r < bound) return r;
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace degsim
