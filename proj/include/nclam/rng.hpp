#ifndef NCLAM_RNG_HPP
#define NCLAM_RNG_HPP

#include <cstdint>

namespace nclam {

/// splitmix64: the fixed, portable generator behind every random subcommand.
/// Identical seeds give identical streams on every platform; nothing in the
/// project draws from std:: distributions, whose outputs are
/// implementation-defined.
struct SplitMix64 {
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {0, ..., bound-1} by rejection; exactly unbiased.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    bool coin() { return next() & 1; }

    std::uint64_t state;
};

/// Derives the seed of worker task `index` from a base seed, so multi-seed
/// workloads get independent, reproducible streams.
inline std::uint64_t child_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 g(base + 0x9E3779B97F4A7C15ull * (index + 1));
    return g.next();
}

}  // namespace nclam

#endif
