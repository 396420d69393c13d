#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace modulift {

// Exact rational on 64-bit integers, reduced, denominator > 0.
// Only what the t-ratio gate needs: construction, comparison, printing.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_one() const { return num == den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace modulift
