// residue.cpp

#include "goldbach/residue.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace goldbach {

uint64_t class_divisor(uint64_t a, uint64_t m) {
    if (m == 0) throw std::invalid_argument("class_divisor: m must be >= 1");
    return std::gcd(a % m, m);   // gcd(0, m) = m, so div(0) = m falls out
}

uint64_t sigma_general(uint64_t m, uint64_t c, const PrimeTable& primes) {
    if (m < 2) throw std::invalid_argument("sigma_general: m must be >= 2");
    Factorization odd = primes.odd_prime_factors(m);
    std::vector<uint64_t> ps;
    if (m % 2 == 0) ps.push_back(2);
    ps.insert(ps.end(), odd.odd_prime_divisors.begin(), odd.odd_prime_divisors.end());

    unsigned __int128 r = m;
    for (uint64_t p : ps) {
        assert(r % p == 0);
        r = r / p * (c % p == 0 ? p - 1 : p - 2);
    }
    if (r > ~uint64_t(0)) throw std::overflow_error("sigma_general: result overflow");
    return static_cast<uint64_t>(r);
}

uint64_t sigma_bruteforce(uint64_t m, uint64_t c) {
    if (m < 2) throw std::invalid_argument("sigma_bruteforce: m must be >= 2");
    if (m > 100000)
        throw std::invalid_argument("sigma_bruteforce: enumeration budget is m <= 1e5");
    std::vector<uint64_t> units;
    for (uint64_t a = 0; a < m; ++a)
        if (std::gcd(a, m) == 1) units.push_back(a);
    uint64_t cc = c % m, count = 0;
    for (uint64_t a : units)
        for (uint64_t b : units)
            if ((a + b) % m == cc) ++count;
    return count;
}

uint64_t sigma_primorial(uint32_t h, uint64_t d) {
    if (h < 2 || h > 15) throw std::invalid_argument("sigma_primorial: need 2 <= h <= 15");
    uint64_t m = primorial(h);
    if (d == 0 || d % 2 != 0 || m % d != 0)
        throw std::invalid_argument("sigma_primorial: d must be an even divisor of primorial(h)");
    unsigned __int128 r = 1;
    for (uint32_t i = 1; i < h; ++i) {
        uint64_t p = kFirstPrimes[i];
        r *= (d % p == 0) ? p - 1 : p - 2;
    }
    // r < primorial(h) so it always fits
    return static_cast<uint64_t>(r);
}

std::vector<uint64_t> even_divisors(uint32_t h) {
    if (h == 0) throw std::invalid_argument("even_divisors: h must be >= 1");
    if (h > 15) throw std::overflow_error("even_divisors: h > 15 overflows 64-bit arithmetic");
    std::vector<uint64_t> divs{2};
    for (uint32_t i = 1; i < h; ++i) {
        size_t sz = divs.size();
        for (size_t k = 0; k < sz; ++k) divs.push_back(divs[k] * kFirstPrimes[i]);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

std::string hsv_hex(double hue) {
    // fixed s = 0.85, v = 0.75; deterministic #rrggbb
    double h6 = hue / 60.0;
    int i = static_cast<int>(h6) % 6;
    double f = h6 - std::floor(h6);
    double v = 0.75, s = 0.85;
    double p = v * (1 - s), q = v * (1 - s * f), t = v * (1 - s * (1 - f));
    double r = 0, g = 0, b = 0;
    switch (i) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(r * 255), int(g * 255), int(b * 255));
    return buf;
}

} // namespace

std::vector<std::string> stratum_palette(uint32_t count) {
    static const char* named[14] = {"black",  "red",   "blue", "green", "grey",
                                    "violet", "orange", "cyan", "maroon", "olive",
                                    "teal",   "navy",  "magenta", "gold"};
    std::vector<std::string> out;
    out.reserve(count);
    if (count <= 14) {
        for (uint32_t i = 0; i < count; ++i) out.emplace_back(named[i]);
    } else {
        for (uint32_t i = 0; i < count; ++i) out.push_back(hsv_hex(360.0 * i / count));
    }
    return out;
}

SigmaTable strata(uint32_t h) {
    if (h < 2 || h > 15) throw std::invalid_argument("strata: need 2 <= h <= 15");
    SigmaTable t;
    t.h = h;
    t.m = primorial(h);
    auto divs = even_divisors(h);
    std::vector<uint64_t> sigmas;
    sigmas.reserve(divs.size());
    for (uint64_t d : divs) sigmas.push_back(sigma_primorial(h, d));

    std::vector<uint64_t> distinct = sigmas;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    t.distinct_sigmas = static_cast<uint32_t>(distinct.size());

    auto palette = stratum_palette(t.distinct_sigmas);
    t.rows.reserve(divs.size());
    for (size_t i = 0; i < divs.size(); ++i) {
        uint32_t rank = static_cast<uint32_t>(
            std::lower_bound(distinct.begin(), distinct.end(), sigmas[i]) - distinct.begin());
        t.rows.push_back({divs[i], sigmas[i], rank, palette[rank]});
    }
    return t;
}

const SigmaRow& SigmaTable::row_for_divisor(uint64_t d) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), d,
                               [](const SigmaRow& r, uint64_t v) { return r.d < v; });
    if (it == rows.end() || it->d != d)
        throw std::invalid_argument("SigmaTable: not an even divisor of the modulus");
    return *it;
}

LayerKey classify(uint64_t n, const SigmaTable& table) {
    if (n < 3) throw std::invalid_argument("classify: n must be >= 3");
    uint64_t d = std::gcd(2 * n, table.m);
    const SigmaRow& row = table.row_for_divisor(d);
    return {n, d, row.sigma, row.stratum_rank};
}

uint64_t count_class_pair_reps(uint64_t E, uint64_t m, uint64_t a, uint64_t b,
                               uint64_t min_val, Convention convention) {
    if (m < 2) throw std::invalid_argument("count_class_pair_reps: m must be >= 2");
    uint64_t am = a % m, bm = b % m;
    if (E < 2 * min_val) return 0;
    uint64_t count = 0;
    for (uint64_t x = min_val; E - x >= min_val; ++x) {
        uint64_t y = E - x;
        if (x % 2 == 0 || y % 2 == 0) continue;
        if (x % m != am || y % m != bm) continue;
        if (convention == Convention::unordered && am == bm && x > y) continue;
        ++count;
    }
    return count;
}

} // namespace goldbach
