// paircount.hpp
// g(n) and correlated Goldbach functions g_X(n) over [3, N], computed by
// two cross-checkable backends: a bit-test scan over the source elements
// and an FFT autocorrelation of the 0/1 indicator. The two must agree
// exactly, element for element.

#pragma once
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goldbach/convention.hpp"
#include "goldbach/primes.hpp"
#include "goldbach/sequences.hpp"

namespace goldbach {

// 0/1 membership of the source set over [0, limit]. Only odd positions may
// be set; for the prime source positions 0, 1, 2 stay clear.
class IndicatorBits {
public:
    static IndicatorBits odd_primes(const PrimeTable& t, uint64_t limit);
    static IndicatorBits from_sequence(const OddSequence& s, uint64_t limit);
    static IndicatorBits from_values(std::span<const uint64_t> values, uint64_t limit,
                                     std::string label);

    uint64_t limit() const { return limit_; }
    bool test(uint64_t x) const {
        return x <= limit_ && ((bits_[x >> 6] >> (x & 63)) & 1);
    }
    // ascending source elements <= limit
    const std::vector<uint64_t>& values() const { return values_; }
    const std::string& label() const { return label_; }

private:
    uint64_t limit_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<uint64_t> values_;
    std::string label_;
};

struct PairCountSeries {
    static constexpr uint64_t n_min = 3;
    uint64_t n_max = 0;
    Convention convention = Convention::ordered;
    std::vector<uint32_t> counts;        // counts[n - n_min]
    std::string source;

    uint32_t at(uint64_t n) const;       // bounds-checked
};

// counts[n] = #{(x,y) in source^2 : x + y = 2n} under the convention.
// Iterates source elements x <= n and tests the bit at 2n - x; exact, and
// deterministic for any thread count (threads = 0 means hardware default).
PairCountSeries goldbach_series_bitset(const IndicatorBits& ind, uint64_t n_max,
                                       Convention convention, unsigned threads = 0);

// Same counts through a real-input FFT autocorrelation of the indicator,
// rounded to nearest integer. Refuses 2N > 2^24, where double-precision
// round-off could reach 0.5 for 0/1 inputs of this density; every rounded
// value is checked to sit within 1e-3 of an integer.
PairCountSeries goldbach_series_convolution(const IndicatorBits& ind, uint64_t n_max,
                                            Convention convention);

enum class Backend { bitset, fft };

// g_seq(n) for n in [3, N]. The sequence must cover values up to 2N - 3.
PairCountSeries correlated_series(const OddSequence& seq, uint64_t n_max,
                                  Convention convention,
                                  Backend backend = Backend::bitset,
                                  unsigned threads = 0);

struct ThresholdResult {
    // smallest m such that counts[n] > 0 for every m < n <= n_max; empty
    // when counts[n_max] itself is 0 (no threshold within range)
    std::optional<uint64_t> threshold;
    uint64_t certified_up_to = 0;        // the claim is certified only up to here
};

ThresholdResult first_threshold(const PairCountSeries& s);

} // namespace goldbach
