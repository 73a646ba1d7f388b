#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eistheta/modular.hpp"

#include <functional>
#include <numeric>

using namespace eistheta;

TEST_CASE("cusp counts and Eisenstein dimensions at the working levels") {
    CHECK(cusp_count(16) == 6);
    CHECK(cusp_count(36) == 12);
    CHECK(cusp_count(144) == 24);
    CHECK(eisenstein_dim(16) == 5);
    CHECK(eisenstein_dim(36) == 11);
    CHECK(eisenstein_dim(144) == 23);
}

TEST_CASE("prime power closed form matches the divisor sum") {
    for (long long p : {2, 3, 5, 7})
        for (long long k = 1; k <= 7; ++k) {
            long long pk = 1;
            for (long long i = 0; i < k; ++i) pk *= p;
            CHECK(eisenstein_dim_prime_power(p, k) == eisenstein_dim(pk));
        }
}

TEST_CASE("make_cusp reduces representatives") {
    CHECK(make_cusp(2, 4) == Cusp{1, 2});
    CHECK(make_cusp(-1, 3) == Cusp{-1, 3});
    CHECK(make_cusp(3, -6) == Cusp{-1, 2});
    CHECK(make_cusp(5, 0) == Cusp{1, 0});
    CHECK(make_cusp(7, 1).is_infinity() == false);
    CHECK(cusp_str(make_cusp(1, 0)) == "oo");
    CHECK(cusp_str(make_cusp(0, 1)) == "0");
    CHECK(cusp_str(make_cusp(5, 12)) == "5/12");
}

TEST_CASE("enumerated cusps are complete and pairwise inequivalent") {
    for (long long N : {1, 4, 9, 12, 16, 27, 36, 144}) {
        std::vector<Cusp> cusps = enumerate_cusps(N);
        CHECK(static_cast<long long>(cusps.size()) == cusp_count(N));
        CHECK(cusps.back().is_infinity());
        for (size_t i = 0; i < cusps.size(); ++i)
            for (size_t j = i + 1; j < cusps.size(); ++j)
                CHECK_FALSE(cusp_equivalent(N, cusps[i], cusps[j]));
        // every reduced fraction falls into exactly one class
        for (long long k = 1; k <= N; ++k)
            for (long long h = 0; h < k; ++h) {
                if (std::gcd(h, k) != 1) continue;
                Cusp c = make_cusp(h, k);
                int hits = 0;
                for (const Cusp& rep : cusps) hits += cusp_equivalent(N, rep, c);
                CHECK(hits == 1);
            }
        // class sizes by denominator follow the phi(gcd(d, N/d)) count
        for (long long d = 1; d <= N; ++d) {
            if (N % d != 0) continue;
            long long expect = euler_phi(std::gcd(d, N / d));
            long long got = 0;
            for (const Cusp& rep : cusps)
                got += (rep.is_infinity() ? N : rep.k) == d;
            CHECK(got == expect);
        }
    }
}

TEST_CASE("cusp values are constant on equivalence classes at the atom level") {
    // A sieve/rescale combination transforms under Gamma_0(L) with L = M^2 d,
    // so its cusp value is an invariant of Gamma_0(L)-classes, not of any
    // smaller group.  Each probe is tested at its own level.
    struct Probe {
        long long level;
        std::function<CycNumber(const Cusp&)> value;
    };
    const std::vector<Probe> probes = {
        {36, [](const Cusp& c) { return cusp_value_S(6, 1, c); }},
        {18, [](const Cusp& c) { return cusp_value_SV(3, 2, frac(2), c); }},
        {36, [](const Cusp& c) { return cusp_value_SV(2, 1, frac(9), c); }},
        {72, [](const Cusp& c) { return cusp_value_SV(6, 1, frac(2), c); }},
    };
    for (const Probe& probe : probes) {
        const long long N = probe.level;
        std::vector<Cusp> reps = enumerate_cusps(N);
        for (long long k = 1; k <= 2 * N; ++k)
            for (long long h = 0; h < k; ++h) {
                if (std::gcd(h, k) != 1) continue;
                Cusp c = make_cusp(h, k);
                for (const Cusp& rep : reps) {
                    if (!cusp_equivalent(N, rep, c)) continue;
                    CHECK(probe.value(rep) == probe.value(c));
                }
            }
    }
}

TEST_CASE("number theory helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(0));
}
