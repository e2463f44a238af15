#ifndef GGB_RNG_HPP
#define GGB_RNG_HPP

#include <cstdint>
#include <random>

namespace ggb {

// splitmix64 step; used for seed mixing so that derived streams are
// decorrelated from the base seed and from each other.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-trial seed: hash of (base seed, trial index). Records carry the
// derived seed, so any trial replays without knowing the base.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(splitmix64(base) ^ splitmix64(index + 0x51ed270b0a1c57d5ULL));
}

// Seeded random stream. Bounded draws are implemented on the raw
// mt19937_64 output (rejection sampling) instead of
// std::uniform_int_distribution, whose mapping is implementation-defined;
// this keeps sequences identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ggb

#endif
