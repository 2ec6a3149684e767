#ifndef FROB_RNG_HPP
#define FROB_RNG_HPP

#include <cstdint>

namespace frob {

// SplitMix64: pure 64-bit integer arithmetic, so identical seeds give
// identical streams on every platform. This is the determinism contract
// the simulation depends on; std::mt19937_64 plus the standard
// distributions would not provide it.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [lo, hi], unbiased via bitmask rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t mask = ~0ULL;
        if (range != 0) {
            mask = 1;
            while (mask < range) mask <<= 1;
            --mask;
        }
        for (;;) {
            const std::uint64_t v = next() & mask;
            if (v < range || range == 0)
                return lo + static_cast<std::int64_t>(v);
        }
    }

  private:
    std::uint64_t state_;
};

// Independent substream for one iteration index: records are pure
// functions of (seed, index), so any partition of indices across workers
// reproduces the same stream.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 seeder(seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
    return SplitMix64(seeder.next());
}

} // namespace frob

#endif
