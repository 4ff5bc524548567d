// primes.cpp
// Segmented odd-only sieve and the query machinery on top of it.

#include "goldbach/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace goldbach {

namespace {

uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// 2^21 bits = 2^22 integers per segment, 256 KiB of working set
constexpr uint64_t kSegmentBits = uint64_t(1) << 21;

} // namespace

PrimeTable::PrimeTable(uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");

    nbits_ = (limit + 1) / 2;                    // odds 1, 3, ..., <= limit
    oddbits_.assign((nbits_ + 63) / 64, 0);

    // base odd primes up to sqrt(limit), plain byte sieve
    uint64_t root = isqrt(limit);
    std::vector<uint8_t> small(root + 1, 1);
    std::vector<uint64_t> base;
    for (uint64_t i = 3; i <= root; i += 2) {
        if (!small[i]) continue;
        base.push_back(i);
        for (uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
    }

    // mark odd composites segment by segment
    for (uint64_t seg_lo = 0; seg_lo < nbits_; seg_lo += kSegmentBits) {
        uint64_t seg_hi = std::min(nbits_, seg_lo + kSegmentBits);   // exclusive
        uint64_t lo_val = 2 * seg_lo + 1;
        uint64_t hi_val = 2 * (seg_hi - 1) + 1;
        for (uint64_t p : base) {
            uint64_t start = p * p;
            if (start > hi_val) break;
            if (start < lo_val)
                start += 2 * p * ((lo_val - start + 2 * p - 1) / (2 * p));
            for (uint64_t v = start; v <= hi_val; v += 2 * p)
                oddbits_[(v >> 1) >> 6] |= uint64_t(1) << ((v >> 1) & 63);
        }
    }

    oddbits_[0] |= 1;                            // 1 is not prime
    if (nbits_ % 64)                             // ghost bits past the limit
        oddbits_.back() |= ~uint64_t(0) << (nbits_ % 64);

    word_pi_.resize(oddbits_.size() + 1);
    word_pi_[0] = 0;
    for (size_t w = 0; w < oddbits_.size(); ++w)
        word_pi_[w + 1] =
            word_pi_[w] + static_cast<uint32_t>(64 - std::popcount(oddbits_[w]));
    total_ = 1 + word_pi_.back();                // the prime 2 plus all odd primes
}

bool PrimeTable::is_prime(uint64_t x) const {
    if (x > limit_) throw std::out_of_range("PrimeTable::is_prime: x exceeds table limit");
    if (x == 2) return true;
    if (x < 2 || x % 2 == 0) return false;
    uint64_t j = x >> 1;
    return !((oddbits_[j >> 6] >> (j & 63)) & 1);
}

uint64_t PrimeTable::zeros_up_to_bit(uint64_t j) const {
    uint64_t w = j >> 6, b = j & 63;
    uint64_t mask = (b == 63) ? ~uint64_t(0) : ((uint64_t(1) << (b + 1)) - 1);
    return word_pi_[w] + static_cast<uint64_t>(std::popcount(~oddbits_[w] & mask));
}

uint64_t PrimeTable::prime_count(uint64_t x) const {
    if (x > limit_) throw std::out_of_range("PrimeTable::prime_count: x exceeds table limit");
    if (x < 2) return 0;
    if (x == 2) return 1;
    return 1 + zeros_up_to_bit((x - 1) / 2);
}

uint64_t PrimeTable::prime_count_in_class(uint64_t m, uint64_t a, uint64_t x) const {
    if (m < 2) throw std::invalid_argument("prime_count_in_class: m must be >= 2");
    if (a >= m) throw std::invalid_argument("prime_count_in_class: need 0 <= a < m");
    if (x > limit_) throw std::out_of_range("prime_count_in_class: x exceeds table limit");
    uint64_t count = 0;
    for (uint64_t v = (a == 0) ? m : a; v <= x; v += m)
        if (v >= 2 && is_prime(v)) ++count;
    return count;
}

uint64_t PrimeTable::nth_prime(uint64_t n) const {
    if (n == 0) throw std::invalid_argument("nth_prime: indices are 1-based");
    if (n > total_) throw std::out_of_range("nth_prime: beyond table coverage");
    if (n == 1) return 2;
    uint64_t target = n - 1;                     // rank among odd primes
    auto it = std::lower_bound(word_pi_.begin(), word_pi_.end(), target);
    uint64_t w = static_cast<uint64_t>(it - word_pi_.begin()) - 1;
    uint64_t remaining = target - word_pi_[w];
    uint64_t word = ~oddbits_[w];
    while (word) {
        uint64_t b = static_cast<uint64_t>(std::countr_zero(word));
        if (--remaining == 0) return 2 * (w * 64 + b) + 1;
        word &= word - 1;
    }
    throw std::logic_error("nth_prime: inconsistent cumulative counts");
}

std::vector<uint64_t> PrimeTable::primes_up_to(uint64_t x) const {
    if (x > limit_) throw std::out_of_range("primes_up_to: x exceeds table limit");
    std::vector<uint64_t> out;
    if (x < 2) return out;
    out.reserve(prime_count(x));
    out.push_back(2);
    if (x < 3) return out;
    uint64_t jmax = (x - 1) / 2;
    for (uint64_t w = 0; w <= jmax >> 6; ++w) {
        uint64_t word = ~oddbits_[w];
        while (word) {
            uint64_t b = static_cast<uint64_t>(std::countr_zero(word));
            word &= word - 1;
            uint64_t j = w * 64 + b;
            if (j > jmax) return out;
            out.push_back(2 * j + 1);
        }
    }
    return out;
}

Factorization PrimeTable::odd_prime_factors(uint64_t n) const {
    if (n == 0) throw std::invalid_argument("odd_prime_factors: n must be >= 1");
    if (n > limit_) throw std::out_of_range("odd_prime_factors: n exceeds table limit");
    Factorization f;
    f.n = n;
    uint64_t x = n;
    while (x % 2 == 0) x /= 2;
    for (uint64_t p = 3; p * p <= x; p += 2) {
        if (!is_prime(p) || x % p) continue;
        f.odd_prime_divisors.push_back(p);
        while (x % p == 0) x /= p;
    }
    if (x > 1) f.odd_prime_divisors.push_back(x);   // leftover is prime
    return f;
}

PrimeTable build_sieve(uint64_t limit) { return PrimeTable(limit); }

uint64_t primorial(uint32_t h) {
    if (h == 0) throw std::invalid_argument("primorial: h must be >= 1");
    if (h > 15) throw std::overflow_error("primorial: h > 15 overflows 64-bit arithmetic");
    uint64_t r = 1;
    for (uint32_t i = 0; i < h; ++i) r *= kFirstPrimes[i];
    return r;
}

} // namespace goldbach
