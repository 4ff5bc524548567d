// sequences.hpp
// The odd-integer families r, s, t, u, v, w and their counting functions
// pi_X. The v and w families pick one odd integer per interval of a growth
// function; picks are configurable and reproducible, including the
// coprime-preference variants that bias elements into classes prime to
// 3*5*...*p_h.

#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach {

enum class PickStrategy { min_odd, max_odd, pseudorandom };
enum class CompositeBias { none, max };

// Restrict interval picks to odds coprime to 3*5*...*p_h. bias = none takes
// any coprime odd; bias = max prefers composite coprime odds over prime
// ones (then any coprime, then any odd). Intervals with no coprime
// candidate fall back to any odd in the interval.
struct CoprimePreference {
    uint32_t h = 8;
    CompositeBias bias = CompositeBias::none;
    uint64_t modulus() const { return primorial(h) / 2; }
};

struct SequenceRecipe {
    char family = '?';
    PickStrategy strategy = PickStrategy::min_odd;
    uint64_t seed = 0;
    std::optional<CoprimePreference> coprime;
    // 1-based element indices where the interval held no odd integer and
    // the smallest unused odd >= interval start was taken instead
    std::vector<uint64_t> deviations;
};

struct OddSequence {
    std::string id;
    std::vector<uint64_t> elements;   // strictly increasing, all odd
    SequenceRecipe recipe;
    uint64_t coverage_limit = 0;      // largest guaranteed-complete value
};

// SplitMix64, spelled out so sequences are reproducible bit-exactly across
// implementations:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Interval picks draw one value per interval: index = next() % poolsize.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
private:
    uint64_t state_;
};

// growth functions behind t, u, v and w
double growth_a(uint64_t h);    // (h+1) ln(h+1)
double growth_y(uint64_t k);    // (k+1) ln((k+1) ln(k+1))
double pi_lower(double x);      // x / (ln x - 1)

// r_1 = 3; r_i = p_i + 2 for i > 1.
OddSequence seq_r(const PrimeTable& primes, uint64_t count);

// s_1 = 3, s_2 = 5; then p_i + 2 when p_i == 5 (mod 6), p_i + 4 when
// p_i == 1 (mod 6).
OddSequence seq_s(const PrimeTable& primes, uint64_t count);

// t_h = odd-adjusted floor of growth_a(h+1) = (h+2) ln(h+2).
OddSequence seq_t(uint64_t count);

// u_k = odd-adjusted floor of growth_y(k+1).
OddSequence seq_u(uint64_t count);

// v_1 = 3; one odd from [y_k, y_{k+1}) per k >= 2.
OddSequence seq_v(uint64_t count, PickStrategy strategy, uint64_t seed = 0,
                  std::optional<CoprimePreference> coprime = {},
                  const PrimeTable* primes = nullptr);

// Unique solution x_j > e^2 of x/(ln x - 1) = 7 + j, by bracketed bisection
// on the increasing branch.
double solve_x(uint64_t j, double tol = 1e-9);

// w_1..w_4 = 3, 5, 7, 11; then one odd from [x_j, x_{j+1}) per j.
// coprime-preference with bias = max needs a prime table covering the
// generated range for its compositeness tests.
OddSequence seq_w(uint64_t count, PickStrategy strategy, uint64_t seed = 0,
                  std::optional<CoprimePreference> coprime = {},
                  const PrimeTable* primes = nullptr);

// pi_X(x) by binary search. Requires x <= coverage_limit.
uint64_t seq_pi(const OddSequence& seq, uint64_t x);

// Generation front end shared by the CLI and the test suites.
struct FamilyRequest {
    char family = 'r';                 // one of r s t u v w
    PickStrategy strategy = PickStrategy::pseudorandom;
    uint64_t seed = 0;
    std::optional<CoprimePreference> coprime;
};

OddSequence generate_sequence(const FamilyRequest& req, uint64_t count,
                              const PrimeTable* primes);

// Smallest doubling generation whose last element reaches min_last.
OddSequence generate_covering(const FamilyRequest& req, uint64_t min_last,
                              const PrimeTable* primes);

} // namespace goldbach
