#pragma once

#include <cstdint>

#include "gc/bits.hpp"

namespace gc {

// splitmix64 step function. Chosen over std::mt19937 and the std
// distributions because its output is fully specified here, so streams are
// reproducible across platforms and standard library versions.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64_next(state_); }

    // Uniform value in [0, bound). Unbiased: masks to the next power of two
    // and rejects overshoots. bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

private:
    std::uint64_t state_;
};

// Per-trial seed derivation: scramble the trial index, fold it into the base
// seed, scramble again. Documented in the README; experiment results are a
// pure function of (base_seed, trial_index).
inline std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t trial_index) {
    std::uint64_t s = trial_index;
    std::uint64_t folded = base_seed ^ splitmix64_next(s);
    return splitmix64_next(folded);
}

// count independent fair bits, drawn 64 at a time.
inline Bits random_bits(SplitMix64& rng, std::size_t count) {
    Bits out(count);
    std::uint64_t buf = 0;
    unsigned have = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (have == 0) {
            buf = rng.next();
            have = 64;
        }
        out[i] = static_cast<std::uint8_t>(buf & 1u);
        buf >>= 1;
        --have;
    }
    return out;
}

} // namespace gc
