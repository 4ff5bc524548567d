#include "doctest.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "goldbach/sequences.hpp"

using namespace goldbach;

TEST_CASE("seq_r") {
    auto t = build_sieve(1000);
    auto r = seq_r(t, 5);
    std::vector<uint64_t> expect{3, 5, 7, 9, 13};
    CHECK(r.elements == expect);
    CHECK(r.elements[0] == 3);   // r_1 = p_2
    auto r2 = seq_r(t, 100);
    for (size_t i = 1; i < r2.elements.size(); ++i)
        CHECK(t.is_prime(r2.elements[i] - 2));
    CHECK_THROWS_AS(seq_r(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(seq_r(t, t.total_primes() + 1), std::out_of_range);
}

TEST_CASE("seq_s") {
    auto t = build_sieve(10000);
    auto s = seq_s(t, 6);
    CHECK(s.elements[0] == 3);
    CHECK(s.elements[1] == 5);
    CHECK(s.elements[2] == 7);    // p_3 = 5 == 5 (mod 6)
    CHECK(s.elements[3] == 11);   // p_4 = 7 == 1 (mod 6)
    // beyond the prime head s_1 = 3, nothing is divisible by 3 (the family's
    // composite members all avoid 3)
    auto s2 = seq_s(t, 500);
    for (uint64_t e : s2.elements)
        if (e > 3) CHECK(e % 3 != 0);
}

TEST_CASE("seq_t") {
    auto t = seq_t(2000);
    CHECK(t.elements[0] == 3);    // floor(3 ln 3) = 3
    CHECK(t.elements[2] == 9);    // floor(5 ln 5) = 8, even, +1
    CHECK(t.elements[1] == 5);
}

TEST_CASE("seq_u") {
    auto u = seq_u(2000);
    CHECK(u.elements[0] == 3);    // floor(y_2) = 3
    CHECK(u.elements[1] == 7);    // floor(y_3) = 6, even, +1
    std::vector<uint64_t> head(u.elements.begin(), u.elements.begin() + 10);
    std::vector<uint64_t> expect{3, 7, 11, 15, 19, 23, 27, 31, 35, 41};
    CHECK(head == expect);
}

TEST_CASE("pi_t and pi_u against pi") {
    auto table = build_sieve(600000);
    auto t = seq_t(60000);
    REQUIRE(t.coverage_limit >= 500000);
    CHECK(seq_pi(t, 115) == 31);
    CHECK(table.prime_count(115) == 30);
    CHECK(seq_pi(t, 115) > table.prime_count(115));
    double ratio = double(seq_pi(t, 500000)) / (500000.0 / std::log(500000.0));
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.3);

    auto u = seq_u(60000);
    REQUIRE(u.coverage_limit >= 500000);
    // pi_u(x) < pi(x) for every x in [2, 5e5]: walk both lists in lockstep
    size_t iu = 0;
    uint64_t pi_u = 0;
    auto primes = table.primes_up_to(500000);
    size_t ip = 0;
    uint64_t pi_p = 0;
    for (uint64_t x = 2; x <= 500000; ++x) {
        while (iu < u.elements.size() && u.elements[iu] <= x) { ++iu; ++pi_u; }
        while (ip < primes.size() && primes[ip] <= x) { ++ip; ++pi_p; }
        REQUIRE(pi_u < pi_p);
    }
}

TEST_CASE("seq_v interval picks") {
    auto v_min = seq_v(10, PickStrategy::min_odd);
    CHECK(v_min.elements[0] == 3);
    CHECK(v_min.elements[1] == 5);    // [y_2, y_3) ~ [3.58, 6.85)
    auto v_max = seq_v(10, PickStrategy::max_odd);
    CHECK(v_max.elements[2] == 9);    // [y_3, y_4) ~ [6.85, 10.43)

    SUBCASE("containment: v_k in [y_k, y_{k+1}) for k >= 2") {
        for (auto strat : {PickStrategy::min_odd, PickStrategy::max_odd,
                           PickStrategy::pseudorandom}) {
            for (uint64_t seed = 0; seed < 4; ++seed) {
                auto v = seq_v(3000, strat, seed);
                for (uint64_t k = 2; k <= 3000; ++k) {
                    double e = double(v.elements[k - 1]);
                    REQUIRE(e >= growth_y(k));
                    REQUIRE(e < growth_y(k + 1));
                }
            }
        }
    }
}

TEST_CASE("solve_x") {
    double x1 = solve_x(1);
    CHECK(x1 > 11.5);
    CHECK(x1 < 11.7);
    CHECK(pi_lower(11.5) < 8.0);
    CHECK(pi_lower(11.7) > 8.0);
    double prev = 0;
    for (uint64_t j = 1; j <= 200; ++j) {
        double xj = solve_x(j);
        CHECK(std::abs(pi_lower(xj) - double(7 + j)) <= 1e-9);
        CHECK(xj > prev);
        prev = xj;
    }
    CHECK_THROWS_AS(solve_x(0), std::invalid_argument);
    CHECK_THROWS_AS(solve_x(1, -1.0), std::invalid_argument);
}

TEST_CASE("seq_w head and containment") {
    auto w = seq_w(2000, PickStrategy::pseudorandom, 3);
    std::vector<uint64_t> head(w.elements.begin(), w.elements.begin() + 4);
    std::vector<uint64_t> expect{3, 5, 7, 11};
    CHECK(head == expect);
    for (uint64_t j = 1; j + 4 <= 2000; ++j) {
        double e = double(w.elements[j + 3]);
        REQUIRE(e >= solve_x(j));
        REQUIRE(e < solve_x(j + 1));
    }
    // deviations may only ever hit the first few intervals
    for (uint64_t idx : w.recipe.deviations) CHECK(idx < 9);
}

TEST_CASE("every family generates strictly increasing odd elements") {
    auto table = build_sieve(1 << 20);
    std::vector<FamilyRequest> reqs;
    for (char fam : {'r', 's', 't', 'u'}) reqs.push_back({fam, PickStrategy::min_odd, 0, {}});
    for (char fam : {'v', 'w'}) {
        for (auto strat : {PickStrategy::min_odd, PickStrategy::max_odd,
                           PickStrategy::pseudorandom})
            for (uint64_t seed = 0; seed < 10; ++seed)
                reqs.push_back({fam, strat, seed, {}});
        reqs.push_back({fam, PickStrategy::pseudorandom, 1,
                        CoprimePreference{8, CompositeBias::none}});
        reqs.push_back({fam, PickStrategy::pseudorandom, 1,
                        CoprimePreference{8, CompositeBias::max}});
    }
    for (const auto& req : reqs) {
        auto s = generate_sequence(req, 1500, &table);
        REQUIRE(s.elements.size() == 1500);
        uint64_t prev = 0;
        for (uint64_t e : s.elements) {
            REQUIRE(e % 2 == 1);
            REQUIRE(e > prev);
            prev = e;
        }
    }
}

TEST_CASE("determinism and seeding") {
    auto a = seq_v(500, PickStrategy::pseudorandom, 7);
    auto b = seq_v(500, PickStrategy::pseudorandom, 7);
    CHECK(a.elements == b.elements);
    auto c = seq_v(500, PickStrategy::pseudorandom, 8);
    CHECK(a.elements != c.elements);
    // the documented SplitMix64 stream
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFull);
}

TEST_CASE("coprime preference") {
    auto table = build_sieve(1 << 21);
    CoprimePreference cp{8, CompositeBias::none};
    CHECK(cp.modulus() == 4849845);

    // measure at the same coverage the figures use; short prefixes sit in
    // narrower intervals and fall back more often
    auto w1 = generate_covering({'w', PickStrategy::pseudorandom, 0, cp}, 1000000, &table);
    auto w2 = generate_covering(
        {'w', PickStrategy::pseudorandom, 0, CoprimePreference{8, CompositeBias::max}},
        1000000, &table);
    uint64_t cop1 = 0, comp1 = 0, comp2 = 0, cop2 = 0;
    size_t count = std::min(w1.elements.size(), w2.elements.size());
    for (size_t i = 100; i < count; ++i) {
        cop1 += std::gcd(w1.elements[i], cp.modulus()) == 1;
        comp1 += !table.is_prime(w1.elements[i]);
        cop2 += std::gcd(w2.elements[i], cp.modulus()) == 1;
        comp2 += !table.is_prime(w2.elements[i]);
    }
    double denom = double(count) - 100.0;
    // measured ~0.978 for this family and modulus
    CHECK(double(cop1) / denom >= 0.97);
    CHECK(double(cop2) / denom >= 0.97);
    // bias = max pushes composites well above the unbiased variant (~0.79 vs ~0.55)
    CHECK(comp2 > comp1);
    CHECK(double(comp2) / denom >= 0.75);
}

TEST_CASE("seq_pi") {
    auto table = build_sieve(1000);
    auto r = seq_r(table, 20);
    CHECK(seq_pi(r, 10) == 4);     // {3, 5, 7, 9}
    CHECK(seq_pi(r, 0) == 0);
    CHECK(seq_pi(r, 3) == 1);
    CHECK_THROWS_AS(seq_pi(r, r.coverage_limit + 1), std::out_of_range);
}

TEST_CASE("generate_covering reaches the target") {
    auto table = build_sieve(1 << 20);
    for (char fam : {'r', 's', 't', 'u', 'v', 'w'}) {
        FamilyRequest req{fam, PickStrategy::pseudorandom, 2, {}};
        auto s = generate_covering(req, 200000, &table);
        CHECK(s.coverage_limit >= 200000);
    }
    FamilyRequest req{'r', PickStrategy::min_odd, 0, {}};
    auto small = build_sieve(100);
    CHECK_THROWS_AS(generate_covering(req, 1000000, &small), std::invalid_argument);
}
