#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eistheta/elliptic.hpp"
#include "eistheta/quadform.hpp"

using namespace eistheta;

namespace {

FrobeniusData frob(long long p) { return frobenius_data(reduce_curve(curve_x3_plus_1, p)); }

}  // namespace

TEST_CASE("reduce_curve validates the modulus") {
    CHECK_THROWS_AS(reduce_curve(curve_x3_plus_1, 6), std::invalid_argument);
    CHECK_THROWS_AS(reduce_curve(curve_x3_plus_1, 1), std::invalid_argument);
    CurveModP c = reduce_curve({0, 0, 0, -1, 6}, 5);
    CHECK(c.a4 == 4);
    CHECK(c.a6 == 1);
}

TEST_CASE("discriminant and c4 of the reference curve") {
    CurveModP c = reduce_curve(curve_x3_plus_1, 101);
    // global invariants of y^2 = x^3 + 1 are c4 = 0, disc = -432
    CHECK(curve_c4(c) == 0);
    CHECK(curve_discriminant(c) == -432);
}

TEST_CASE("point counts over prime fields") {
    CHECK(count_points_fp(reduce_curve(curve_x3_plus_1, 5)) == 6);
    CHECK(count_points_fp(reduce_curve(curve_x3_plus_1, 7)) == 12);
    CHECK(count_points_fp(reduce_curve(curve_x3_plus_1, 13)) == 12);
    CHECK(count_points_fp(reduce_curve(curve_x3_plus_1, 103)) == 84);
    CHECK(frob(103).a_p == 20);
    CHECK_THROWS_AS(count_points_fp(reduce_curve(curve_x3_plus_1, 3)), std::domain_error);
}

TEST_CASE("point counts over quadratic extensions") {
    CHECK(count_points_fp2(reduce_curve(curve_x3_plus_1, 5)) == 36);
    CHECK(count_points_fp2(reduce_curve(curve_x3_plus_1, 7)) == 48);
    CHECK(count_points_fp2(reduce_curve(curve_x3_plus_1, 11)) == 144);
    // the field tower construction needs an odd characteristic
    CHECK_THROWS_AS(count_points_fp2(reduce_curve({0, 0, 1, 0, 0}, 2)),
                    std::invalid_argument);
}

TEST_CASE("trace recursion against direct extension counts") {
    FrobeniusData f7 = frob(7);
    CHECK(f7.reduction == Reduction::good);
    CHECK(f7.a_p == -4);
    CHECK(trace_power(f7, 2) == 2);
    CHECK(trace_power(f7, 3) == 20);
    CHECK(point_count_pk(f7, 2) == 48);
    CHECK(point_count_pk(f7, 3) == 324);
    CHECK(count_points_fpk(reduce_curve(curve_x3_plus_1, 7), 3, true) == 324);
    for (long long p : {5, 11, 13, 19})
        CHECK(point_count_pk(frob(p), 2) ==
              count_points_fp2(reduce_curve(curve_x3_plus_1, p)));
}

TEST_CASE("divisor-sum form of the extension counts") {
    // N_p(k) = sigma1(p^k) - p*sigma1(p^(k-2)) - trace_power(k)
    for (long long p : {7, 13}) {
        FrobeniusData f = frob(p);
        long long pk = 1;
        for (int k = 1; k <= 3; ++k) {
            pk *= p;
            long long lower = k >= 2 ? sigma1(pk / (p * p)) : 0;
            CHECK(point_count_pk(f, k) == sigma1(pk) - p * lower - trace_power(f, k));
        }
    }
}

TEST_CASE("newform coefficient recursion") {
    FrobeniusData f7 = frob(7);
    CHECK(a_prime_power(f7, 0) == 1);
    CHECK(a_prime_power(f7, 1) == -4);
    CHECK(a_prime_power(f7, 2) == 9);  // a_p^2 - p
    CHECK(a_prime_power(frob(13), 1) == 2);
    for (long long p : {5, 7, 13, 19, 31}) {
        FrobeniusData f = frob(p);
        long long pk = 1;
        for (int k = 0; k <= 3; ++k) {
            CHECK(a_prime_power(f, k) == eta6_coefficient(pk));
            pk *= p;
        }
    }
}

TEST_CASE("bad reduction classification") {
    FrobeniusData add2 = frob(2);
    CHECK(add2.reduction == Reduction::additive);
    CHECK(add2.a_p == 0);
    CHECK(a_prime_power(add2, 2) == 0);
    CHECK(eta6_coefficient(4) == 0);
    FrobeniusData add3 = frob(3);
    CHECK(add3.reduction == Reduction::additive);
    CHECK(add3.a_p == 0);
    // y^2 + xy + y = x^3 - x has a node at p = 2
    FrobeniusData mult = frobenius_data(reduce_curve({1, 0, 1, -1, 0}, 2));
    CHECK(mult.reduction == Reduction::multiplicative);
    CHECK(mult.a_p == -1);
    CHECK(a_prime_power(mult, 3) == -1);
}

TEST_CASE("Hasse bound on a short sweep") {
    for (long long p = 5; p < 100; ++p) {
        if (!is_prime(p)) continue;
        long long a = frob(p).a_p;
        CHECK(a * a <= 4 * p);
    }
}

TEST_CASE("headline prime identity checks") {
    CheckResult c103 = verify_r13_prime(103);
    CHECK(c103.pass);
    CHECK(c103.expected == "84");
    CHECK(c103.actual == "84");
    CHECK(representation_count(four_squares_form(1, 3), 103) == 28);
    for (long long p : {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97})
        CHECK(verify_r13_prime(p).pass);
}

TEST_CASE("prime power identities") {
    for (const CheckResult& c : verify_r13_prime_power(7, 4)) CHECK(c.pass);
    for (const CheckResult& c : verify_r13_prime_power(13, 3)) CHECK(c.pass);
    for (const CheckResult& c : verify_r13_prime_power(5, 4)) CHECK(c.pass);
    for (const CheckResult& c : verify_r13_prime_power(11, 4)) CHECK(c.pass);
    CHECK(verify_r13_prime_power(5, 4).size() == 2);  // even exponents only
}

TEST_CASE("multiplicative decomposition of composite arguments") {
    CHECK(verify_r13_general(49, {{7, 2}}).pass);
    CHECK(verify_r13_general(91, {{7, 1}, {13, 1}}).pass);
    CHECK(verify_r13_general(175, {{5, 2}, {7, 1}}).pass);
    CHECK(verify_r13_general(931, {{7, 2}, {19, 1}}).pass);
    CHECK_THROWS_AS(verify_r13_general(91, {{7, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_r13_general(35, {{5, 1}, {7, 1}}), std::invalid_argument);
}

TEST_CASE("table relations on a short prime sweep") {
    std::vector<golden::TableRow> rows = golden::representation_table_rows();
    REQUIRE(rows.size() == 7);
    for (const golden::TableRow& row : rows) {
        // T1R2/T1R3 store the reference normalization, which misses a factor
        // 3 on the left side; every qualifying prime disagrees.
        bool discrepant = row.name == "T1R2" || row.name == "T1R3";
        for (const CheckResult& c : verify_table_relation(row, 60)) {
            bool skip = c.label.find("skipped") != std::string::npos;
            if (skip || !discrepant)
                CHECK(c.pass);
            else
                CHECK_FALSE(c.pass);
        }
    }
    // tripling the left side restores both rows
    std::vector<golden::TableRow> corrected = golden::corrected_table_rows();
    REQUIRE(corrected.size() == 2);
    for (const golden::TableRow& row : corrected)
        for (const CheckResult& c : verify_table_relation(row, 60)) CHECK(c.pass);
    // the final row keeps p = 7 and reports it as skipped bad reduction
    bool saw_skip = false;
    for (const CheckResult& c : verify_table_relation(rows[6], 20))
        saw_skip = saw_skip || c.label.find("skipped") != std::string::npos;
    CHECK(saw_skip);
}
