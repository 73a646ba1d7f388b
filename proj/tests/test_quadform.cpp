#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eistheta/golden.hpp"
#include "eistheta/quadform.hpp"

using namespace eistheta;

namespace {

long long int_at(const FourierSeries& f, long long n) {
    CycNumber c = f.coeff_int(n);
    REQUIRE(c.is_rational());
    Rational r = c.rational_part();
    REQUIRE(r.get_den() == 1);
    return r.get_num().get_si();
}

CongruentForm free_four_squares() {
    Gram g{{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}};
    return CongruentForm(g, {0, 0, 0, 0}, {1, 1, 1, 1});
}

}  // namespace

TEST_CASE("constructor rejects malformed forms") {
    Gram odd{{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}};
    CHECK_THROWS_AS(CongruentForm(odd, {0, 0, 0, 0}, {1, 1, 1, 1}), std::invalid_argument);
    Gram asym{{{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}};
    CHECK_THROWS_AS(CongruentForm(asym, {0, 0, 0, 0}, {1, 1, 1, 1}), std::invalid_argument);
    Gram indef{{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, -2}}};
    CHECK_THROWS_AS(CongruentForm(indef, {0, 0, 0, 0}, {1, 1, 1, 1}), std::invalid_argument);
    Gram ok{{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}};
    CHECK_THROWS_AS(CongruentForm(ok, {0, 0, 0, 0}, {1, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("form evaluation") {
    CongruentForm q = four_squares_form(1, 3);
    CHECK(q.value({1, 1, 1, 1}) == 4);
    CHECK(q.value({1, -2, 4, 1}) == 22);
    CHECK(q.value({0, 0, 0, 0}) == 0);
    Gram pair{{{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}}};
    CongruentForm r(pair, {0, 0, 0, 0}, {1, 1, 1, 1});
    CHECK(r.value({1, 1, 0, 0}) == 3);
    CHECK(r.value({1, -1, 0, 0}) == 1);
}

TEST_CASE("classical four squares counts") {
    CongruentForm q = free_four_squares();
    CHECK(representation_count(q, 0) == 1);
    CHECK(representation_count(q, 1) == 8);
    CHECK(representation_count(q, 2) == 24);
    CHECK(representation_count(q, 3) == 32);
    CHECK(representation_count(q, 4) == 24);
    // Jacobi: r_4(n) = 8 sigma(n) for odd n
    CHECK(representation_count(q, 15) == 8 * 24);
}

TEST_CASE("theta series agrees with per-n representation counts") {
    for (auto [s, M] : std::vector<std::pair<long long, long long>>{{1, 3}, {0, 2}, {5, 6}}) {
        CongruentForm q = four_squares_form(s, M);
        FourierSeries th = theta_series(q, 300);
        for (long long n = 0; n < 300; ++n)
            CHECK(int_at(th, n) == representation_count(q, n));
    }
}

TEST_CASE("free theta series is the fourth power of the square theta") {
    FourierSeries t3 = jacobi_theta(3, frac(50)).v_operator(frac(2));
    FourierSeries quartic = t3 * t3 * t3 * t3;
    CHECK(equal_prefix(theta_series(free_four_squares(), 100), quartic, frac(100)));
}

TEST_CASE("odd congruent theta is the odd square theta power under V8") {
    FourierSeries t2 = jacobi_theta(2, frac(30));
    FourierSeries quartic = (t2 * t2) * (t2 * t2);
    CHECK(equal_prefix(theta_series(four_squares_form(1, 2), 240),
                       quartic.v_operator(frac(8)), frac(240)));
}

TEST_CASE("reference theta prefixes") {
    for (auto [s, M] : std::vector<std::pair<long long, long long>>{{1, 2}, {1, 3}, {1, 4}, {1, 6}}) {
        FourierSeries th = theta_series(four_squares_form(s, M), 200);
        for (const auto& [n, c] : golden::reference_theta_prefix(s, M)) {
            REQUIRE(n < 200);
            CHECK(int_at(th, n) == c);
        }
    }
}

TEST_CASE("closed form equals enumeration on a sample window") {
    for (auto [s, M] : std::vector<std::pair<long long, long long>>{
             {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4},
             {3, 4}, {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}) {
        CongruentForm q = four_squares_form(s, M);
        for (long long n = 0; n <= 240; ++n)
            CHECK(closed_form_r(s, M, n) == representation_count(q, n));
    }
    CHECK_THROWS_AS(closed_form_r(0, 5, 10), std::invalid_argument);
}

TEST_CASE("closed form spot values") {
    CHECK(closed_form_r(1, 2, 12) == 64);
    CHECK(closed_form_r(1, 3, 25) == 12);
    CHECK(closed_form_r(0, 3, 9) == 8);
    CHECK(closed_form_r(0, 2, 0) == 1);
    CHECK(closed_form_r(0, 6, 0) == 1);
    CHECK(closed_form_r(1, 6, 3) == 0);
}

TEST_CASE("eta coefficient accessor") {
    CHECK(eta6_coefficient(0) == 0);
    CHECK(eta6_coefficient(1) == 1);
    CHECK(eta6_coefficient(7) == -4);
    CHECK(eta6_coefficient(13) == 2);
    CHECK(eta6_coefficient(25) == -5);
    CHECK(eta6_coefficient(26) == 0);
    CHECK(eta6_coefficient(5000) == 0);
    // beyond the cached window the product is recomputed
    std::vector<long long> wide = eta6_quartic_coeffs(5500);
    for (long long n : {5003, 5449, 5500}) CHECK(eta6_coefficient(n) == wide[n]);
}

TEST_CASE("no modulus-4 obstruction in the odd congruent theta") {
    CHECK_FALSE(mod4_divisibility_check(400).has_value());
}

TEST_CASE("coordinate bound covers the truncation window") {
    CongruentForm q = free_four_squares();
    long long b = q.coordinate_bound(100);
    CHECK(b >= 9);  // x = (9,0,0,0) has value 81 < 100
    CHECK(q.coordinate_bound(1) >= 0);
}
