#include <doctest.h>

#include <cstdint>
#include <vector>

#include "twinsort/efficiency.hpp"
#include "twinsort/twin_sort.hpp"

using namespace twinsort;

TEST_CASE("closed-form efficiency values") {
    CHECK(best_case(25) == 24);
    CHECK(best_case(2) == 1);
    CHECK(best_case(1) == 0);
    CHECK(best_case(0) == 0);  // clamped, the formula would go negative

    CHECK(worst_case(5) == 10);
    CHECK(worst_case(13) == 78);
    CHECK(worst_case(0) == 0);
    CHECK(worst_case(1) == 0);

    CHECK(average_case(5) == 5.0);
    CHECK(average_case(10) == 22.5);
    CHECK(average_case(0) == 0.0);
}

TEST_CASE("efficiency_table reproduces the n = 2..13 reference rows") {
    const std::vector<EfficiencyRow> expected{
        {2, 1, 1, 0.5},    {3, 2, 3, 1.5},    {4, 3, 6, 3.0},
        {5, 4, 10, 5.0},   {6, 5, 15, 7.5},   {7, 6, 21, 10.5},
        {8, 7, 28, 14.0},  {9, 8, 36, 18.0},  {10, 9, 45, 22.5},
        {11, 10, 55, 27.5}, {12, 11, 66, 33.0}, {13, 12, 78, 39.0}};
    CHECK(efficiency_table(2, 13) == expected);
}

TEST_CASE("efficiency_table edges") {
    const std::vector<EfficiencyRow> single = efficiency_table(7, 7);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == EfficiencyRow{7, 6, 21, 10.5});

    const std::vector<EfficiencyRow> zero = efficiency_table(0, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == EfficiencyRow{0, 0, 0, 0.0});

    CHECK_THROWS_AS(efficiency_table(5, 2), std::invalid_argument);
}

TEST_CASE("average formatting uses minimal decimals") {
    CHECK(format_average(worst_case(2)) == "0.5");
    CHECK(format_average(worst_case(5)) == "5");
    CHECK(format_average(worst_case(10)) == "22.5");
    CHECK(format_average(worst_case(12)) == "33");
    CHECK(format_average(worst_case(0)) == "0");
}

TEST_CASE("measured sorted/reversed runs hit the model exactly") {
    for (std::uint64_t n = 2; n <= 13; ++n) {
        std::vector<int> sorted(n);
        for (std::size_t i = 0; i < n; ++i) sorted[i] = static_cast<int>(i);
        const SortStats best = twin_sort(sorted);
        CHECK(best.comparisons == best_case(n));
        CHECK(best.swaps == 0);
        CHECK(best.passes <= 2);
        CHECK(best.terminated_early);

        std::vector<int> reversed(n);
        for (std::size_t i = 0; i < n; ++i)
            reversed[i] = static_cast<int>(n - 1 - i);
        const SortStats worst = twin_sort(reversed);
        CHECK(worst.comparisons == worst_case(n));
    }
}
