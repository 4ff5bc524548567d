// primes.hpp
// Prime generation and counting services: odd-only bit sieve with per-word
// cumulative counts, pi(x), pi_{m,a}(x), nth prime, primorials, odd prime
// factorization.
//
// Encoding:
//   bit index j  ->  odd number 2j+1
//   odd number n ->  bit index (n-1)/2
// A set bit means "odd composite" (bit 0, the number 1, is always set).
// 2 is handled as a special case everywhere.

#pragma once
#include <cstdint>
#include <vector>

namespace goldbach {

// p_1 .. p_15; enough for every primorial that fits 64 bits exactly.
inline constexpr uint64_t kFirstPrimes[15] = {2,  3,  5,  7,  11, 13, 17, 19,
                                              23, 29, 31, 37, 41, 43, 47};

// Distinct odd primes dividing n, ascending. Empty when n = 2^k.
struct Factorization {
    uint64_t n = 1;
    std::vector<uint64_t> odd_prime_divisors;
};

// Primality and prime counting up to a fixed limit.
//
// pi queries are answered from a per-word running count of odd primes plus
// one popcount on the final partial word. Construction sieves odd numbers
// in segments of 2^21 bits (2^22 integers) so the working set stays cache
// resident for large limits; the table is immutable afterwards and safe
// for concurrent reads from any number of threads.
class PrimeTable {
public:
    explicit PrimeTable(uint64_t limit);

    uint64_t limit() const { return limit_; }

    // 2 <= x <= limit(); throws std::out_of_range above the limit.
    bool is_prime(uint64_t x) const;

    // pi(x). Requires x <= limit().
    uint64_t prime_count(uint64_t x) const;

    // pi_{m,a}(x) = #{p prime <= x : p == a (mod m)}. Requires m >= 2, a < m.
    uint64_t prime_count_in_class(uint64_t m, uint64_t a, uint64_t x) const;

    // p_n with p_1 = 2; throws std::out_of_range when p_n > limit().
    uint64_t nth_prime(uint64_t n) const;

    // pi(limit)
    uint64_t total_primes() const { return total_; }

    std::vector<uint64_t> primes_up_to(uint64_t x) const;

    // Distinct odd primes dividing n, by trial division over sieved primes.
    // Requires 1 <= n <= limit().
    Factorization odd_prime_factors(uint64_t n) const;

private:
    uint64_t zeros_up_to_bit(uint64_t j) const;   // odd primes among bits [0, j]

    uint64_t limit_;
    uint64_t nbits_;                    // number of odd values <= limit
    std::vector<uint64_t> oddbits_;     // set = odd composite
    std::vector<uint32_t> word_pi_;     // word_pi_[w] = odd primes in words [0, w)
    uint64_t total_ = 0;
};

// Constructor wrapper under the operation's name; throws std::invalid_argument
// when limit < 2.
PrimeTable build_sieve(uint64_t limit);

// 2 * 3 * ... * p_h. Requires 1 <= h <= 15 (the last h exact in 64 bits).
uint64_t primorial(uint32_t h);

} // namespace goldbach
