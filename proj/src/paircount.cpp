// paircount.cpp
// Bit-test backend, FFT backend and the threshold scan.

#include "goldbach/paircount.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace goldbach {

IndicatorBits IndicatorBits::from_values(std::span<const uint64_t> values, uint64_t limit,
                                         std::string label) {
    IndicatorBits ind;
    ind.limit_ = limit;
    ind.bits_.assign(limit / 64 + 1, 0);
    ind.label_ = std::move(label);
    uint64_t prev = 0;
    for (uint64_t v : values) {
        if (v > limit) break;                  // values arrive ascending
        if (v % 2 == 0)
            throw std::invalid_argument("IndicatorBits: only odd positions may be set");
        if (v < prev) throw std::invalid_argument("IndicatorBits: values must ascend");
        prev = v;
        ind.bits_[v >> 6] |= uint64_t(1) << (v & 63);
        ind.values_.push_back(v);
    }
    return ind;
}

IndicatorBits IndicatorBits::odd_primes(const PrimeTable& t, uint64_t limit) {
    if (limit > t.limit())
        throw std::invalid_argument("IndicatorBits: prime table smaller than indicator range");
    auto ps = t.primes_up_to(limit);
    std::vector<uint64_t> odd(ps.begin() + (ps.empty() || ps[0] != 2 ? 0 : 1), ps.end());
    return from_values(odd, limit, "primes");
}

IndicatorBits IndicatorBits::from_sequence(const OddSequence& s, uint64_t limit) {
    return from_values(s.elements, limit, s.id);
}

uint32_t PairCountSeries::at(uint64_t n) const {
    if (n < n_min || n > n_max) throw std::out_of_range("PairCountSeries::at");
    return counts[n - n_min];
}

// ---------------------------------------------------------------
// bitset backend
//
// Odd-packed view for the hot loop: bit j stands for the odd value 2j+3,
// so for x = 2j+3 <= n the partner test "2n - x in source" becomes a test
// of bit (n-3) - j. One subtract and one bit probe per source element.
// ---------------------------------------------------------------

PairCountSeries goldbach_series_bitset(const IndicatorBits& ind, uint64_t n_max,
                                       Convention convention, unsigned threads) {
    if (n_max < PairCountSeries::n_min)
        throw std::invalid_argument("goldbach_series_bitset: n_max must be >= 3");
    if (ind.limit() < 2 * n_max)
        throw std::invalid_argument("goldbach_series_bitset: indicator must reach 2*n_max");

    PairCountSeries out;
    out.n_max = n_max;
    out.convention = convention;
    out.source = ind.label();
    out.counts.assign(n_max - PairCountSeries::n_min + 1, 0);

    const uint64_t max_j = n_max - 3;              // index of value 2*n_max - 3
    std::vector<uint64_t> packed(max_j / 64 + 2, 0);
    std::vector<uint32_t> src;                     // indices of source values <= n_max
    for (uint64_t v : ind.values()) {
        if (v < 3) continue;
        if (v > 2 * n_max - 3) break;
        uint64_t j = (v - 3) / 2;
        packed[j >> 6] |= uint64_t(1) << (j & 63);
        if (v <= n_max) src.push_back(static_cast<uint32_t>(j));
    }

    unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    const uint64_t kBlock = 4096;
    const uint64_t nblocks = (n_max - 3) / kBlock + 1;

    auto worker = [&](unsigned tid) {
        for (uint64_t blk = tid; blk < nblocks; blk += nthreads) {
            uint64_t n_lo = 3 + blk * kBlock;
            uint64_t n_hi = std::min(n_max, n_lo + kBlock - 1);
            // number of source values <= n, advanced as n grows
            size_t cnt = static_cast<size_t>(
                std::upper_bound(src.begin(), src.end(), (n_lo - 3) / 2) - src.begin());
            for (uint64_t n = n_lo; n <= n_hi; ++n) {
                uint64_t K = n - 3;
                uint64_t jmax = K / 2;             // 2j+3 <= n
                while (cnt < src.size() && src[cnt] <= jmax) ++cnt;
                uint32_t c = 0;
                for (size_t t = 0; t < cnt; ++t) {
                    uint64_t j2 = K - src[t];
                    c += (packed[j2 >> 6] >> (j2 & 63)) & 1;
                }
                // c counts pairs x <= y, the diagonal included once
                if (convention == Convention::ordered) {
                    uint32_t diag = (n % 2 == 1 && ind.test(n)) ? 1u : 0u;
                    out.counts[n - 3] = 2 * c - diag;
                } else {
                    out.counts[n - 3] = c;
                }
            }
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    return out;
}

// ---------------------------------------------------------------
// FFT backend
// ---------------------------------------------------------------

namespace {

using cd = std::complex<double>;

// Iterative radix-2 transform with twiddles read from a precomputed table
// (repeated-multiplication twiddles would drift too far at 2^20 points).
void fft_inplace(std::vector<cd>& a, bool inverse) {
    const size_t n = a.size();
    assert((n & (n - 1)) == 0);
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<cd> roots(n / 2);
    for (size_t k = 0; k < n / 2; ++k) {
        double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        roots[k] = {std::cos(ang), std::sin(ang)};
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        size_t step = n / len;
        for (size_t i = 0; i < n; i += len) {
            for (size_t j = 0; j < len / 2; ++j) {
                cd w = roots[j * step];
                if (inverse) w = std::conj(w);
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

// Linear autocorrelation c[s] = sum_x a[x] a[s-x] through one half-length
// complex FFT (standard real-input packing: z[k] = a[2k] + i a[2k+1]).
std::vector<double> real_autocorrelation(const std::vector<double>& a) {
    const size_t L = a.size();
    size_t M = 1;
    while (M < 2 * L) M <<= 1;
    const size_t H = M / 2;

    std::vector<cd> z(H, cd{0.0, 0.0});
    for (size_t i = 0; i < L; ++i) {
        if (i & 1)
            z[i >> 1].imag(a[i]);
        else
            z[i >> 1].real(a[i]);
    }
    fft_inplace(z, false);

    // unpack the length-M spectrum, square it, pack it back
    std::vector<cd> spec(H + 1);
    for (size_t k = 0; k <= H; ++k) {
        cd zk = z[k % H];
        cd zc = std::conj(z[(H - k) % H]);
        cd even = 0.5 * (zk + zc);
        cd odd = cd(0.0, -0.5) * (zk - zc);
        double ang = -std::numbers::pi * static_cast<double>(k) / static_cast<double>(H);
        cd tw{std::cos(ang), std::sin(ang)};
        cd A = even + tw * odd;
        spec[k] = A * A;
    }
    std::vector<cd> zi(H);
    for (size_t k = 0; k < H; ++k) {
        cd ck = spec[k];
        cd cc = std::conj(spec[H - k]);
        cd even = 0.5 * (ck + cc);
        cd odd = 0.5 * (ck - cc);
        double ang = std::numbers::pi * static_cast<double>(k) / static_cast<double>(H);
        cd tw{std::cos(ang), std::sin(ang)};
        zi[k] = even + cd(0.0, 1.0) * (tw * odd);
    }
    fft_inplace(zi, true);

    std::vector<double> c(2 * L - 1);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = (i & 1) ? zi[i >> 1].imag() : zi[i >> 1].real();
    return c;
}

} // namespace

PairCountSeries goldbach_series_convolution(const IndicatorBits& ind, uint64_t n_max,
                                            Convention convention) {
    if (n_max < PairCountSeries::n_min)
        throw std::invalid_argument("goldbach_series_convolution: n_max must be >= 3");
    if (ind.limit() < 2 * n_max)
        throw std::invalid_argument("goldbach_series_convolution: indicator must reach 2*n_max");
    if (2 * n_max > (uint64_t(1) << 24))
        throw std::invalid_argument(
            "goldbach_series_convolution: 2N > 2^24 exceeds the exact-rounding range; "
            "use the bitset backend");

    PairCountSeries out;
    out.n_max = n_max;
    out.convention = convention;
    out.source = ind.label();
    out.counts.assign(n_max - PairCountSeries::n_min + 1, 0);

    // positions 0 .. 2N, so the transform length lands at the next power of
    // two at or above 2(2N+1)
    std::vector<double> a(2 * n_max + 1, 0.0);
    for (uint64_t v : ind.values()) {
        if (v > 2 * n_max - 3) break;
        if (v >= 3) a[v] = 1.0;
    }
    auto c = real_autocorrelation(a);

    for (uint64_t n = 3; n <= n_max; ++n) {
        double raw = c[2 * n];
        double r = std::round(raw);
        if (std::abs(raw - r) > 1e-3)
            throw std::runtime_error("goldbach_series_convolution: value drifted from integer");
        auto ordered = static_cast<uint64_t>(r);
        if (convention == Convention::ordered) {
            out.counts[n - 3] = static_cast<uint32_t>(ordered);
        } else {
            uint64_t diag = (n % 2 == 1 && ind.test(n)) ? 1 : 0;
            assert((ordered + diag) % 2 == 0);
            out.counts[n - 3] = static_cast<uint32_t>((ordered + diag) / 2);
        }
    }
    return out;
}

PairCountSeries correlated_series(const OddSequence& seq, uint64_t n_max,
                                  Convention convention, Backend backend, unsigned threads) {
    if (n_max < PairCountSeries::n_min)
        throw std::invalid_argument("correlated_series: n_max must be >= 3");
    if (seq.coverage_limit < 2 * n_max - 3)
        throw std::invalid_argument("correlated_series: sequence does not cover 2N - 3");
    auto ind = IndicatorBits::from_sequence(seq, 2 * n_max);
    return backend == Backend::bitset
               ? goldbach_series_bitset(ind, n_max, convention, threads)
               : goldbach_series_convolution(ind, n_max, convention);
}

ThresholdResult first_threshold(const PairCountSeries& s) {
    if (s.counts.empty()) throw std::invalid_argument("first_threshold: empty series");
    ThresholdResult r;
    r.certified_up_to = s.n_max;
    if (s.counts.back() == 0) return r;            // reported, not an error
    uint64_t m = PairCountSeries::n_min - 1;
    for (uint64_t n = s.n_max; n-- > PairCountSeries::n_min;) {
        if (s.counts[n - PairCountSeries::n_min] == 0) {
            m = n;
            break;
        }
    }
    r.threshold = m;
    return r;
}

} // namespace goldbach
