#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace twinsort {

// Non-negative exact fraction, always stored reduced. Big enough for the
// exhaustive-verification sums (at most 9! * 36 comparisons).
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t num, std::uint64_t den) {
        if (den == 0) return {0, 1};
        const std::uint64_t g = std::gcd(num, den);  // >= 1
        return {num / g, den / g};
    }

    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

inline std::string to_string(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace twinsort
