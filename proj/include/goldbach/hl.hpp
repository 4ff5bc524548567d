// hl.hpp
// Conjecture-A machinery: the twin-prime-type constant c, the Sylvester
// factor S(n), the estimator h(n) = 4cn/(ln n)^2 * S(n), Sylvester's 1871
// variant 2 e^{-gamma} h(n), and the normalized comet G(n) = g(n)/S(n).

#pragma once
#include <cstdint>
#include <vector>

#include "goldbach/paircount.hpp"
#include "goldbach/primes.hpp"
#include "goldbach/rational.hpp"

namespace goldbach {

inline constexpr double kEulerGamma = 0.57721566490153286;

// Partial product of prod_{p >= 3} p(p-2)/(p-1)^2 over odd p <= prime_limit.
// tail_bound comes from the crude estimate sum_{p > P} 1/(p-1)^2 <= 1/(P-1);
// the partial products decrease monotonically toward 0.6601618...
struct HLConstant {
    double value = 0.0;
    uint64_t prime_limit = 0;
    double tail_bound = 0.0;
};

HLConstant hl_constant(const PrimeTable& primes, uint64_t prime_limit);

// prod_{p | n, p >= 3} (p-1)/(p-2), exact; 1/1 when n is a power of two.
Rational sylvester_factor(const Factorization& f);

// h(n) = 4 c n / (ln n)^2 * S(n). Requires n >= 3.
double hl_estimate(uint64_t n, const HLConstant& c, const Rational& S);

// Sylvester's 1871 proposal 2 e^{-gamma} h(n), kept for comparison plots.
double sylvester1871_estimate(uint64_t n, const HLConstant& c, const Rational& S);

// G(n) = g(n) / S(n); the counts are scaled by the exact rational and only
// then converted to double. result[i] corresponds to n = g.n_min + i.
std::vector<double> normalize(const PairCountSeries& g, const PrimeTable& primes);

} // namespace goldbach
