// hl.cpp

#include "goldbach/hl.hpp"

#include <cmath>
#include <stdexcept>

namespace goldbach {

HLConstant hl_constant(const PrimeTable& primes, uint64_t prime_limit) {
    if (prime_limit < 3)
        throw std::invalid_argument("hl_constant: prime_limit must be >= 3");
    if (prime_limit > primes.limit())
        throw std::out_of_range("hl_constant: prime_limit exceeds the table");
    double v = 1.0;
    for (uint64_t p : primes.primes_up_to(prime_limit)) {
        if (p < 3) continue;
        double pd = static_cast<double>(p);
        v *= pd * (pd - 2.0) / ((pd - 1.0) * (pd - 1.0));
    }
    return {v, prime_limit, 1.0 / static_cast<double>(prime_limit - 1)};
}

Rational sylvester_factor(const Factorization& f) {
    Rational r{1, 1};
    for (uint64_t p : f.odd_prime_divisors) r = rat_mul(r, p - 1, p - 2);
    return r;
}

double hl_estimate(uint64_t n, const HLConstant& c, const Rational& S) {
    if (n < 3) throw std::invalid_argument("hl_estimate: n must be >= 3");
    double ln = std::log(static_cast<double>(n));
    return 4.0 * c.value * static_cast<double>(n) / (ln * ln) * to_double(S);
}

double sylvester1871_estimate(uint64_t n, const HLConstant& c, const Rational& S) {
    return 2.0 * std::exp(-kEulerGamma) * hl_estimate(n, c, S);
}

std::vector<double> normalize(const PairCountSeries& g, const PrimeTable& primes) {
    std::vector<double> G(g.counts.size());
    for (size_t i = 0; i < g.counts.size(); ++i) {
        uint64_t n = PairCountSeries::n_min + i;
        Rational S = sylvester_factor(primes.odd_prime_factors(n));
        // exact integer scaling first: G = (g * den) / num
        unsigned __int128 num = static_cast<unsigned __int128>(g.counts[i]) * S.den;
        G[i] = static_cast<double>(static_cast<uint64_t>(num)) /
               static_cast<double>(S.num);
    }
    return G;
}

} // namespace goldbach
