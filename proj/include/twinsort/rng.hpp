#pragma once

#include <cstdint>

namespace twinsort {

// splitmix64 (Vigna's public-domain mixer). One 64-bit word of state, one
// output per step; bit-exact everywhere, which is what makes generated
// inputs and per-trial seeds reproducible across runs and platforms.

struct SplitMix64Step {
    std::uint64_t value = 0;
    std::uint64_t next_state = 0;
};

constexpr SplitMix64Step splitmix64_next(std::uint64_t state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return {z ^ (z >> 31), state};
}

class SplitMix64 {
public:
    using result_type = std::uint64_t;

    SplitMix64() = default;
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        const SplitMix64Step step = splitmix64_next(state_);
        state_ = step.next_state;
        return step.value;
    }

    constexpr std::uint64_t operator()() { return next(); }

    constexpr std::uint64_t state() const { return state_; }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~static_cast<result_type>(0); }

private:
    std::uint64_t state_ = 0;
};

}  // namespace twinsort
