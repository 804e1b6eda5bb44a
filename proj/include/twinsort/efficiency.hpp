// Closed-form comparison-count model: best f(n) = n-1, worst
// f(n) = (n-1)*n/2, average = worst/2. The average is the model's claim,
// kept deliberately separate from the measured means in verify.hpp; the
// two disagree and both are reported as-is.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twinsort {

// n-1, clamped to 0 for n < 1 (no comparison is possible).
constexpr std::uint64_t best_case(std::uint64_t n) {
    return n == 0 ? 0 : n - 1;
}

constexpr std::uint64_t worst_case(std::uint64_t n) {
    return n == 0 ? 0 : (n - 1) * n / 2;
}

// worst/2 exactly; the result is either an integer or ends in .5, so a
// double carries it without rounding for any table-sized n.
constexpr double average_case(std::uint64_t n) {
    return static_cast<double>(worst_case(n)) / 2.0;
}

struct EfficiencyRow {
    std::uint64_t n = 0;
    std::uint64_t best = 0;
    std::uint64_t worst = 0;
    double average = 0.0;

    friend bool operator==(const EfficiencyRow&,
                           const EfficiencyRow&) = default;
};

// Average with minimal decimals: "5", not "5.0"; "22.5", not "22.50".
// Integer arithmetic on worst, so no float formatting is involved.
inline std::string format_average(std::uint64_t worst) {
    std::string s = std::to_string(worst / 2);
    if (worst % 2 != 0) s += ".5";
    return s;
}

inline std::vector<EfficiencyRow> efficiency_table(std::uint64_t n_min,
                                                   std::uint64_t n_max) {
    if (n_min > n_max)
        throw std::invalid_argument("efficiency_table: n_min > n_max");
    std::vector<EfficiencyRow> rows;
    rows.reserve(n_max - n_min + 1);
    for (std::uint64_t n = n_min; n <= n_max; ++n)
        rows.push_back({n, best_case(n), worst_case(n), average_case(n)});
    return rows;
}

}  // namespace twinsort
