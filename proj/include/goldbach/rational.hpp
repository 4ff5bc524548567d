// rational.hpp
// Exact positive fractions, enough for Sylvester factors and sigma ratios.

#pragma once
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace goldbach {

// Positive fraction kept in lowest terms.
struct Rational {
    uint64_t num = 1;
    uint64_t den = 1;
};

inline Rational make_rational(uint64_t num, uint64_t den) {
    if (num == 0 || den == 0)
        throw std::invalid_argument("Rational: numerator and denominator must be positive");
    uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

inline bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
}
inline bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }

inline double to_double(const Rational& r) {
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

// r * (n/d), exact and overflow-checked.
inline Rational rat_mul(const Rational& r, uint64_t n, uint64_t d) {
    if (n == 0 || d == 0) throw std::invalid_argument("rat_mul: positive parts only");
    uint64_t g1 = std::gcd(r.num, d), g2 = std::gcd(n, r.den);
    unsigned __int128 nn = static_cast<unsigned __int128>(r.num / g1) * (n / g2);
    unsigned __int128 dd = static_cast<unsigned __int128>(r.den / g2) * (d / g1);
    if (nn > ~uint64_t(0) || dd > ~uint64_t(0))
        throw std::overflow_error("rat_mul: 64-bit overflow");
    return make_rational(static_cast<uint64_t>(nn), static_cast<uint64_t>(dd));
}

} // namespace goldbach
