// residue.hpp
// The residue-class structure behind the comet's bands: counts of unit-pair
// representations sigma_m(c), the even-divisor strata of primorial moduli
// with their colors, per-n layer classification, and explicit class-pair
// representation counts.

#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "goldbach/convention.hpp"
#include "goldbach/primes.hpp"

namespace goldbach {

struct SigmaRow {
    uint64_t d = 0;             // even divisor of the primorial
    uint64_t sigma = 0;
    uint32_t stratum_rank = 0;  // 0-based rank of sigma among distinct values,
                                // ascending; colliding sigmas share one rank
    std::string color;
};

// sigma over all even divisors of primorial(h), ascending by divisor.
struct SigmaTable {
    uint32_t h = 0;
    uint64_t m = 0;
    std::vector<SigmaRow> rows;
    uint32_t distinct_sigmas = 0;

    const SigmaRow& row_for_divisor(uint64_t d) const;
};

struct LayerKey {
    uint64_t n = 0;
    uint64_t d = 0;             // gcd(2n, m)
    uint64_t sigma = 0;
    uint32_t stratum_rank = 0;
};

// div(a) = gcd(a mod m, m), with div(0) = m.
uint64_t class_divisor(uint64_t a, uint64_t m);

// sigma_m(c) = #{(a,b) in (Z_m^*)^2 : a+b = c}, by the closed form
//   m * prod_{p|m, p|c} (1 - 1/p) * prod_{p|m, p nmid c} (1 - 2/p),
// evaluated exactly in 128-bit integers (divide by p before multiplying,
// which stays integral). Requires the table to cover m's factorization.
uint64_t sigma_general(uint64_t m, uint64_t c, const PrimeTable& primes);

// Reference oracle: direct enumeration of all phi(m)^2 unit pairs.
// Enumeration budget: m <= 1e5.
uint64_t sigma_bruteforce(uint64_t m, uint64_t c);

// sigma for a primorial modulus, which depends only on the class divisor:
//   sigma_m(d) = prod_{i=2..h} (p_i - 1)^{a_i} (p_i - 2)^{1 - a_i},
// a_i = 1 iff p_i | d. Requires d an even divisor of primorial(h), 2 <= h <= 15.
uint64_t sigma_primorial(uint32_t h, uint64_t d);

// All 2^{h-1} even divisors 2 * 3^{a_2} *...* p_h^{a_h}, ascending.
std::vector<uint64_t> even_divisors(uint32_t h);

SigmaTable strata(uint32_t h);

// d = gcd(2n, m) plus its sigma and stratum. Requires n >= 3.
LayerKey classify(uint64_t n, const SigmaTable& table);

// #{(x,y) : x == a, y == b (mod m), x,y odd >= min_val, x + y = E} by direct
// enumeration. Ordered keeps the class roles fixed per tuple; unordered
// counts same-class pairs once (x <= y). Cross-class unordered pairs already
// appear exactly once in the ordered enumeration.
uint64_t count_class_pair_reps(uint64_t E, uint64_t m, uint64_t a, uint64_t b,
                               uint64_t min_val, Convention convention);

// Stratum colors, indexed by rank. The named palettes cover up to 14 strata
// (ranks ordered by ascending sigma, matching the figure captions); larger
// tables get procedurally spaced hues.
std::vector<std::string> stratum_palette(uint32_t count);

} // namespace goldbach
