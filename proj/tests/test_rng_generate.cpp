#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "twinsort/generate.hpp"
#include "twinsort/rng.hpp"

using namespace twinsort;

TEST_CASE("splitmix64 matches the published stream from state 0") {
    SplitMix64Step step = splitmix64_next(0);
    CHECK(step.value == 0xE220A8397B1DCDAFULL);
    CHECK(step.next_state == 0x9E3779B97F4A7C15ULL);
    step = splitmix64_next(step.next_state);
    CHECK(step.value == 0x6E789E6AA1B965F4ULL);
    step = splitmix64_next(step.next_state);
    CHECK(step.value == 0x06C45D188009454FULL);
    step = splitmix64_next(step.next_state);
    CHECK(step.value == 0xF88BB8A8724C81ECULL);
    step = splitmix64_next(step.next_state);
    CHECK(step.value == 0x1B39896A51A8749BULL);
}

TEST_CASE("splitmix64 is a pure function with injective state advance") {
    const SplitMix64Step a = splitmix64_next(42);
    const SplitMix64Step b = splitmix64_next(42);
    CHECK(a.value == b.value);
    CHECK(a.next_state == b.next_state);
    CHECK(a.value == 0xBDD732262FEB6E95ULL);

    SplitMix64 rng(0);
    for (std::uint64_t s = 0; s < 1000; ++s)
        CHECK(splitmix64_next(s).next_state !=
              splitmix64_next(s + 1).next_state);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("generate fixed kinds") {
    CHECK(generate(GeneratorKind::Reversed, 5, 123) ==
          std::vector<std::int64_t>{4, 3, 2, 1, 0});
    CHECK(generate(GeneratorKind::Sorted, 3, 99) ==
          std::vector<std::int64_t>{0, 1, 2});
    CHECK(generate(GeneratorKind::Sorted, 0, 0).empty());
    CHECK(generate(GeneratorKind::Random, 0, 0).empty());
    CHECK(generate(GeneratorKind::Random, 1, 7) ==
          std::vector<std::int64_t>{0});
}

TEST_CASE("generate frozen shuffle vectors") {
    // computed independently from the generator definitions
    CHECK(generate(GeneratorKind::Random, 8, 42) ==
          std::vector<std::int64_t>{3, 1, 6, 2, 4, 0, 7, 5});
    CHECK(generate(GeneratorKind::Random, 5, 7) ==
          std::vector<std::int64_t>{4, 1, 3, 0, 2});
    CHECK(generate(GeneratorKind::NearlySorted, 10, 1) ==
          std::vector<std::int64_t>{0, 1, 2, 3, 4, 6, 5, 7, 8, 9});
    CHECK(generate(GeneratorKind::FewUnique, 8, 5) ==
          std::vector<std::int64_t>{2, 0, 3, 1, 1, 0, 1, 3});
}

TEST_CASE("generate determinism and value ranges") {
    for (GeneratorKind kind : kAllGenerators) {
        for (std::size_t n : {0u, 1u, 2u, 10u, 63u}) {
            const auto a = generate(kind, n, 42);
            const auto b = generate(kind, n, 42);
            CHECK(a == b);
            CHECK(a.size() == n);
        }
    }

    SUBCASE("random and nearly_sorted are permutations of 0..n-1") {
        for (GeneratorKind kind :
             {GeneratorKind::Random, GeneratorKind::NearlySorted}) {
            for (std::uint64_t seed : {0u, 1u, 42u, 999u}) {
                auto v = generate(kind, 40, seed);
                std::sort(v.begin(), v.end());
                for (std::int64_t i = 0; i < 40; ++i) CHECK(v[i] == i);
            }
        }
    }
    SUBCASE("few_unique stays in 0..3") {
        const auto v = generate(GeneratorKind::FewUnique, 200, 31);
        CHECK(std::all_of(v.begin(), v.end(),
                          [](std::int64_t x) { return 0 <= x && x <= 3; }));
    }
    SUBCASE("nearly_sorted is near sorted: bounded adjacent displacement") {
        const std::size_t n = 100;
        const auto v = generate(GeneratorKind::NearlySorted, n, 3);
        std::uint64_t inversions = 0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (v[i] > v[j]) ++inversions;
        CHECK(inversions <= (n + 9) / 10);  // one inversion max per transposition
    }
    SUBCASE("different seeds give different shuffles") {
        CHECK(generate(GeneratorKind::Random, 32, 1) !=
              generate(GeneratorKind::Random, 32, 2));
    }
}

TEST_CASE("generator names round-trip") {
    for (GeneratorKind kind : kAllGenerators)
        CHECK(parse_generator(generator_name(kind)) == kind);
    CHECK_FALSE(parse_generator("bogus").has_value());
    CHECK_FALSE(parse_generator("").has_value());
}
