// sequences.cpp

#include "goldbach/sequences.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace goldbach {

double growth_a(uint64_t h) {
    double x = static_cast<double>(h) + 1.0;
    return x * std::log(x);
}

double growth_y(uint64_t k) {
    double x = static_cast<double>(k) + 1.0;
    return x * std::log(x * std::log(x));
}

double pi_lower(double x) { return x / (std::log(x) - 1.0); }

namespace {

uint64_t odd_adjust(uint64_t v) { return v % 2 == 1 ? v : v + 1; }

// first odd integer >= x
uint64_t first_odd_at_least(double x) {
    auto v = static_cast<uint64_t>(std::ceil(x));
    if (static_cast<double>(v) < x) ++v;
    return v | 1;
}

// last odd integer strictly below x
uint64_t last_odd_below(double x) {
    auto v = static_cast<uint64_t>(std::floor(x));
    if (static_cast<double>(v) >= x) --v;
    return v % 2 == 0 ? v - 1 : v;
}

struct Pick {
    uint64_t value = 0;
    bool deviation = false;
};

// One odd from [lo, hi), above prev, honoring strategy and the coprime
// preference. Intervals hold only a handful of odds, so the pools are
// materialized directly.
Pick pick_odd_in(double lo, double hi, uint64_t prev, PickStrategy strategy,
                 SplitMix64& rng, const std::optional<CoprimePreference>& coprime,
                 const PrimeTable* primes) {
    uint64_t first = std::max(first_odd_at_least(lo), prev + 2);
    uint64_t last = last_odd_below(hi);
    if (first > last)
        return {std::max(first_odd_at_least(lo), prev + 2), true};

    std::vector<uint64_t> pool;
    pool.reserve((last - first) / 2 + 1);
    for (uint64_t x = first; x <= last; x += 2) pool.push_back(x);

    if (coprime) {
        std::vector<uint64_t> cop;
        uint64_t mod = coprime->modulus();
        for (uint64_t x : pool)
            if (std::gcd(x, mod) == 1) cop.push_back(x);
        if (!cop.empty()) {
            if (coprime->bias == CompositeBias::max) {
                std::vector<uint64_t> composite;
                for (uint64_t x : cop) {
                    if (!primes || x > primes->limit())
                        throw std::out_of_range(
                            "coprime-preference: prime table does not cover the interval");
                    if (!primes->is_prime(x)) composite.push_back(x);
                }
                pool = composite.empty() ? std::move(cop) : std::move(composite);
            } else {
                pool = std::move(cop);
            }
        }
        // no coprime candidate: any odd in the interval stays eligible
    }

    switch (strategy) {
        case PickStrategy::min_odd: return {pool.front(), false};
        case PickStrategy::max_odd: return {pool.back(), false};
        case PickStrategy::pseudorandom:
            return {pool[rng.next() % pool.size()], false};
    }
    throw std::logic_error("pick_odd_in: unknown strategy");
}

std::string strategy_tag(PickStrategy s, uint64_t seed) {
    switch (s) {
        case PickStrategy::min_odd: return "min";
        case PickStrategy::max_odd: return "max";
        default: return "rand" + std::to_string(seed);
    }
}

std::string make_id(char family, PickStrategy s, uint64_t seed,
                    const std::optional<CoprimePreference>& coprime) {
    std::string id(1, family);
    id += "-" + strategy_tag(s, seed);
    if (coprime) {
        id += "-cop" + std::to_string(coprime->h);
        if (coprime->bias == CompositeBias::max) id += "max";
    }
    return id;
}

void check_odd_increasing(const OddSequence& s) {
    uint64_t prev = 0;
    for (uint64_t e : s.elements) {
        if (e % 2 == 0) throw std::logic_error("sequence produced an even element");
        if (e <= prev) throw std::logic_error("sequence is not strictly increasing");
        prev = e;
    }
}

} // namespace

OddSequence seq_r(const PrimeTable& primes, uint64_t count) {
    if (count == 0) throw std::invalid_argument("seq_r: count must be >= 1");
    if (count > primes.total_primes())
        throw std::out_of_range("seq_r: prime table holds fewer primes than requested");
    auto ps = primes.primes_up_to(primes.limit());
    OddSequence s;
    s.id = "r";
    s.recipe.family = 'r';
    s.elements.reserve(count);
    s.elements.push_back(3);                       // r_1 = p_2
    for (uint64_t i = 2; i <= count; ++i) s.elements.push_back(ps[i - 1] + 2);
    s.coverage_limit = s.elements.back();
    check_odd_increasing(s);
    return s;
}

OddSequence seq_s(const PrimeTable& primes, uint64_t count) {
    if (count == 0) throw std::invalid_argument("seq_s: count must be >= 1");
    if (count > primes.total_primes())
        throw std::out_of_range("seq_s: prime table holds fewer primes than requested");
    auto ps = primes.primes_up_to(primes.limit());
    OddSequence s;
    s.id = "s";
    s.recipe.family = 's';
    s.elements.reserve(count);
    if (count >= 1) s.elements.push_back(3);       // s_1 = p_2
    if (count >= 2) s.elements.push_back(5);       // s_2 = p_3
    for (uint64_t i = 3; i <= count; ++i) {
        uint64_t p = ps[i - 1];
        uint64_t rem = p % 6;
        if (rem != 1 && rem != 5)
            throw std::logic_error("seq_s: prime beyond 3 not congruent +-1 mod 6");
        s.elements.push_back(rem == 5 ? p + 2 : p + 4);
    }
    s.coverage_limit = s.elements.back();
    check_odd_increasing(s);
    return s;
}

OddSequence seq_t(uint64_t count) {
    if (count == 0) throw std::invalid_argument("seq_t: count must be >= 1");
    OddSequence s;
    s.id = "t";
    s.recipe.family = 't';
    s.elements.reserve(count);
    for (uint64_t h = 1; h <= count; ++h)
        s.elements.push_back(odd_adjust(static_cast<uint64_t>(std::floor(growth_a(h + 1)))));
    s.coverage_limit = s.elements.back();
    check_odd_increasing(s);
    return s;
}

OddSequence seq_u(uint64_t count) {
    if (count == 0) throw std::invalid_argument("seq_u: count must be >= 1");
    OddSequence s;
    s.id = "u";
    s.recipe.family = 'u';
    s.elements.reserve(count);
    for (uint64_t k = 1; k <= count; ++k)
        s.elements.push_back(odd_adjust(static_cast<uint64_t>(std::floor(growth_y(k + 1)))));
    s.coverage_limit = s.elements.back();
    check_odd_increasing(s);
    return s;
}

OddSequence seq_v(uint64_t count, PickStrategy strategy, uint64_t seed,
                  std::optional<CoprimePreference> coprime, const PrimeTable* primes) {
    if (count == 0) throw std::invalid_argument("seq_v: count must be >= 1");
    OddSequence s;
    s.id = make_id('v', strategy, seed, coprime);
    s.recipe = {'v', strategy, seed, coprime, {}};
    s.elements.reserve(count);
    s.elements.push_back(3);                       // v_1
    SplitMix64 rng(seed);
    for (uint64_t k = 2; k <= count; ++k) {
        double lo = growth_y(k), hi = growth_y(k + 1);
        if (!(hi - lo > 2.0))
            throw std::logic_error("seq_v: interval unexpectedly narrower than 2");
        Pick p = pick_odd_in(lo, hi, s.elements.back(), strategy, rng, coprime, primes);
        if (p.deviation)
            throw std::logic_error("seq_v: interval without an odd integer");
        s.elements.push_back(p.value);
    }
    s.coverage_limit = s.elements.back();
    check_odd_increasing(s);
    return s;
}

double solve_x(uint64_t j, double tol) {
    if (j == 0) throw std::invalid_argument("solve_x: j must be >= 1");
    if (tol <= 0) throw std::invalid_argument("solve_x: tol must be positive");
    double target = 7.0 + static_cast<double>(j);
    double lo = std::exp(2.0) + 1.0;
    double hi = target * (std::log(target * std::log(target)) + 2.0);
    while (pi_lower(hi) < target) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = pi_lower(mid);
        if (std::abs(v - target) <= tol) return mid;
        (v < target ? lo : hi) = mid;
    }
    throw std::runtime_error("solve_x: bisection did not converge");
}

OddSequence seq_w(uint64_t count, PickStrategy strategy, uint64_t seed,
                  std::optional<CoprimePreference> coprime, const PrimeTable* primes) {
    if (count == 0) throw std::invalid_argument("seq_w: count must be >= 1");
    OddSequence s;
    s.id = make_id('w', strategy, seed, coprime);
    s.recipe = {'w', strategy, seed, coprime, {}};
    s.elements.reserve(count);
    const uint64_t head[4] = {3, 5, 7, 11};
    for (uint64_t i = 0; i < count && i < 4; ++i) s.elements.push_back(head[i]);
    SplitMix64 rng(seed);
    double xj = solve_x(1);
    for (uint64_t j = 1; s.elements.size() < count; ++j) {
        double xn = solve_x(j + 1);
        Pick p = pick_odd_in(xj, xn, s.elements.back(), strategy, rng, coprime, primes);
        if (p.deviation) s.recipe.deviations.push_back(s.elements.size() + 1);
        s.elements.push_back(p.value);
        xj = xn;
    }
    s.coverage_limit = s.elements.back();
    check_odd_increasing(s);
    return s;
}

uint64_t seq_pi(const OddSequence& seq, uint64_t x) {
    if (x > seq.coverage_limit)
        throw std::out_of_range("seq_pi: x beyond the sequence's guaranteed coverage");
    auto it = std::upper_bound(seq.elements.begin(), seq.elements.end(), x);
    return static_cast<uint64_t>(it - seq.elements.begin());
}

OddSequence generate_sequence(const FamilyRequest& req, uint64_t count,
                              const PrimeTable* primes) {
    switch (req.family) {
        case 'r':
            if (!primes) throw std::invalid_argument("family r needs a prime table");
            return seq_r(*primes, count);
        case 's':
            if (!primes) throw std::invalid_argument("family s needs a prime table");
            return seq_s(*primes, count);
        case 't': return seq_t(count);
        case 'u': return seq_u(count);
        case 'v': return seq_v(count, req.strategy, req.seed, req.coprime, primes);
        case 'w': return seq_w(count, req.strategy, req.seed, req.coprime, primes);
        default: throw std::invalid_argument("unknown sequence family");
    }
}

namespace {

// Smallest element count whose last element is guaranteed to reach
// min_last. Exact per family, so generation never runs past the target
// (coprime-preference compositeness tests must stay inside the caller's
// prime table).
uint64_t covering_count(const FamilyRequest& req, uint64_t min_last,
                        const PrimeTable* primes) {
    switch (req.family) {
        case 'r':
        case 's': {
            if (!primes) throw std::invalid_argument("family needs a prime table");
            if (min_last <= 3) return 1;
            // first i >= 2 with p_i >= min_last - 2
            uint64_t x = std::min(min_last - 3, primes->limit());
            uint64_t i = std::max<uint64_t>(2, primes->prime_count(x) + 1);
            if (i > primes->total_primes() || primes->nth_prime(i) + 2 < min_last)
                throw std::invalid_argument(
                    "generate_covering: prime table too small for the requested coverage");
            return i;
        }
        case 't': {
            uint64_t h = 1;
            while (growth_a(h + 1) < static_cast<double>(min_last)) ++h;
            return h;
        }
        case 'u': {
            uint64_t k = 1;
            while (growth_y(k + 1) < static_cast<double>(min_last)) ++k;
            return k;
        }
        case 'v': {
            uint64_t k = 2;
            while (growth_y(k) <= static_cast<double>(min_last)) ++k;
            return k;
        }
        case 'w': {
            if (min_last <= 11) return 4;
            // first j with x_j > min_last; f is increasing, so start just below
            double f = pi_lower(static_cast<double>(min_last));
            uint64_t j = f > 9.0 ? static_cast<uint64_t>(f) - 8 : 1;
            while (solve_x(j) <= static_cast<double>(min_last)) ++j;
            return j + 4;
        }
        default:
            throw std::invalid_argument("unknown sequence family");
    }
}

} // namespace

OddSequence generate_covering(const FamilyRequest& req, uint64_t min_last,
                              const PrimeTable* primes) {
    uint64_t count = covering_count(req, min_last, primes);
    OddSequence s = generate_sequence(req, count, primes);
    if (s.coverage_limit < min_last)
        throw std::logic_error("generate_covering: count prediction fell short");
    return s;
}

} // namespace goldbach
