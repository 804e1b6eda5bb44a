#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "twinsort/rng.hpp"

namespace twinsort {

// Benchmark input families. Every kind is a pure function of
// (kind, n, seed); Sorted and Reversed ignore the seed.
enum class GeneratorKind { Sorted, Reversed, Random, NearlySorted, FewUnique };

inline constexpr GeneratorKind kAllGenerators[] = {
    GeneratorKind::Sorted, GeneratorKind::Reversed, GeneratorKind::Random,
    GeneratorKind::NearlySorted, GeneratorKind::FewUnique};

inline std::string_view generator_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::Sorted: return "sorted";
        case GeneratorKind::Reversed: return "reversed";
        case GeneratorKind::Random: return "random";
        case GeneratorKind::NearlySorted: return "nearly_sorted";
        case GeneratorKind::FewUnique: return "few_unique";
    }
    return "unknown";
}

inline std::optional<GeneratorKind> parse_generator(std::string_view name) {
    for (GeneratorKind kind : kAllGenerators)
        if (name == generator_name(kind)) return kind;
    return std::nullopt;
}

inline std::vector<std::int64_t> generate(GeneratorKind kind, std::size_t n,
                                          std::uint64_t seed) {
    std::vector<std::int64_t> out(n);
    SplitMix64 rng(seed);
    switch (kind) {
        case GeneratorKind::Sorted:
            std::iota(out.begin(), out.end(), std::int64_t{0});
            break;
        case GeneratorKind::Reversed:
            for (std::size_t i = 0; i < n; ++i)
                out[i] = static_cast<std::int64_t>(n - 1 - i);
            break;
        case GeneratorKind::Random:
            // Fisher-Yates over 0..n-1, j = value mod (i+1), i = n-1 .. 1
            std::iota(out.begin(), out.end(), std::int64_t{0});
            for (std::size_t i = n; i-- > 1;) {
                const std::size_t j = rng.next() % (i + 1);
                std::swap(out[i], out[j]);
            }
            break;
        case GeneratorKind::NearlySorted: {
            std::iota(out.begin(), out.end(), std::int64_t{0});
            if (n < 2) break;
            const std::size_t k = (n + 9) / 10;  // ceil(n/10) transpositions
            for (std::size_t t = 0; t < k; ++t) {
                const std::size_t p = rng.next() % (n - 1);
                std::swap(out[p], out[p + 1]);
            }
            break;
        }
        case GeneratorKind::FewUnique:
            for (std::size_t i = 0; i < n; ++i)
                out[i] = static_cast<std::int64_t>(rng.next() % 4);
            break;
    }
    return out;
}

}  // namespace twinsort
