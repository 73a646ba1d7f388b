#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eistheta/eisenstein.hpp"
#include "eistheta/golden.hpp"

#include <set>

using namespace eistheta;

namespace {

const EisElement& by_label(const std::vector<EisElement>& v, const std::string& label) {
    for (const EisElement& e : v)
        if (e.label == label) return e;
    FAIL("no element labeled ", label);
    return v.front();
}

}  // namespace

TEST_CASE("atom levels") {
    CHECK(EisAtom::sieve_atom(6, 1).level() == 36);
    CHECK(EisAtom::sieve_v_atom(6, 1, frac(4)).level() == 144);
    CHECK(EisAtom::sieve_v_atom(2, 1, frac(9)).level() == 36);
    CHECK(EisAtom::combo_atom(2, frac(9)).level() == 36);
    CHECK(EisAtom::combo_atom(3, frac(1, 3)).level() == 3);
    CHECK_THROWS_AS(EisAtom::v_atom(frac(2)).level(), std::logic_error);
}

TEST_CASE("basis sizes match the Eisenstein dimension") {
    for (auto [p, kmax] : std::vector<std::pair<long long, long long>>{{2, 7}, {3, 3}})
        for (long long k = 1; k <= kmax; ++k) {
            long long pk = 1;
            for (long long i = 0; i < k; ++i) pk *= p;
            std::vector<EisElement> basis = basis_gamma0_prime_power(p, k);
            CHECK(static_cast<long long>(basis.size()) == eisenstein_dim(pk));
            std::set<std::string> labels;
            for (const EisElement& e : basis) labels.insert(e.label);
            CHECK(labels.size() == basis.size());
        }
    CHECK(basis_gamma0_prime_power(13, 1).size() == 1);
}

TEST_CASE("unsupported basis parameters throw NotConstructible") {
    CHECK_THROWS_AS(basis_gamma0_prime_power(5, 2), NotConstructible);
    CHECK_THROWS_AS(basis_gamma0_prime_power(7, 2), NotConstructible);
    CHECK_THROWS_AS(basis_gamma0_prime_power(3, 4), NotConstructible);
    CHECK_THROWS_AS(basis_gamma0_prime_power(2, 8), NotConstructible);
}

TEST_CASE("reference expansions match outside the flagged cells") {
    std::set<std::pair<std::string, long long>> flagged;
    for (const golden::SeriesCell& cell : golden::reference_expansion_discrepancies())
        flagged.insert({cell.label, cell.exponent});
    REQUIRE(flagged.size() == 3);

    std::vector<std::vector<EisElement>> bases;
    for (long long k = 1; k <= 7; ++k) bases.push_back(basis_gamma0_prime_power(2, k));

    for (const golden::ReferenceSeries& row : golden::reference_expansions()) {
        long long level = 0, idx = 0;
        REQUIRE(std::sscanf(row.label.c_str(), "E%lld_%lld", &level, &idx) == 2);
        long long k = 0;
        for (long long v = level; v > 1; v /= 2) ++k;
        const EisElement& elt = bases[k - 1][idx - 1];
        long long maxe = 0;
        for (const auto& [e, c] : row.monomials) maxe = std::max(maxe, e);
        FourierSeries f = expansion(elt, frac(maxe + 1));
        for (const auto& [e, c] : row.monomials) {
            CycNumber got = f.coeff(frac(e));
            if (flagged.count({row.label, e}))
                CHECK(got != CycNumber(frac(c)));
            else
                CHECK(got == CycNumber(frac(c)));
        }
    }
}

TEST_CASE("spanning set ranks, with the doubling dependencies priced in") {
    // Prime-power bases are genuinely independent.
    CHECK(matrix_rank(expansion_matrix(basis_gamma0_prime_power(2, 4), frac(200))) == 5);
    // The labelled spanning lists are not: sigma_1(2m) = 3 sigma_1(m)
    // - 2 sigma_1(m/2) splits each plain mod-3 sieve into listed columns
    // (B4 = B2 + 3*B8 - 2*B6 and B7 = B3 + 3*B5 - 2*B9 at level 36), and the
    // mod-2 sieve decomposes through the V-chain, so twelve columns carry
    // rank 9 and thirty columns carry rank 19.
    CHECK(matrix_rank(expansion_matrix(spanning_set_gamma0(36), frac(300))) == 9);
    CHECK(matrix_rank(expansion_matrix(spanning_set_gamma0(144), frac(300))) == 19);
}

TEST_CASE("level 27 basis contains the V3 images of the level 9 sieves") {
    std::vector<EisElement> b9 = basis_gamma0_prime_power(3, 2);
    std::vector<EisElement> b27 = basis_gamma0_prime_power(3, 3);
    const long long T = 120;
    for (int i : {1, 2}) {
        FourierSeries image = expansion(b9[i], frac(T, 3)).v_operator(frac(3));
        CHECK(equal_prefix(image, expansion(b27[i + 2], frac(T)), frac(T)));
    }
}

TEST_CASE("reference cusp tables match outside the flagged cells") {
    struct Fixture {
        std::vector<golden::ReferenceCuspRow> rows;
        std::vector<golden::CuspCell> flagged;
        std::vector<EisElement> elements;
        size_t expect_cells;
        size_t expect_flagged;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({golden::reference_cusp_table_16(),
                        golden::reference_cusp_table_16_discrepancies(),
                        basis_gamma0_prime_power(2, 4), 30, 10});
    fixtures.push_back({golden::reference_cusp_table_36(),
                        golden::reference_cusp_table_36_discrepancies(),
                        spanning_set_gamma0(36), 132, 11});
    for (const Fixture& fx : fixtures) {
        std::set<std::pair<std::string, Cusp>> flagged;
        for (const golden::CuspCell& cell : fx.flagged) flagged.insert({cell.label, cell.cusp});
        REQUIRE(flagged.size() == fx.expect_flagged);
        size_t cells = 0;
        for (const golden::ReferenceCuspRow& row : fx.rows) {
            const EisElement& elt = by_label(fx.elements, row.label);
            for (const auto& [cusp, stored] : row.cells) {
                ++cells;
                CycNumber got = cusp_value(elt, cusp);
                if (flagged.count({row.label, cusp}))
                    CHECK(got != stored);
                else
                    CHECK(got == stored);
            }
        }
        CHECK(cells == fx.expect_cells);
    }
}

TEST_CASE("cusp value spot checks") {
    std::vector<EisElement> b16 = basis_gamma0_prime_power(2, 4);
    CHECK(cusp_value(by_label(b16, "E16_5"), make_cusp(1, 8)) == CycNumber(frac(1, 16)));
    // constant coefficient and value at infinity agree for every element
    for (const EisElement& e : b16)
        CHECK(cusp_value(e, make_cusp(1, 0)) == expansion(e, frac(5)).coeff(frac(0)));
}

TEST_CASE("cusp_values tabulates every class once") {
    std::vector<EisElement> b16 = basis_gamma0_prime_power(2, 4);
    CuspValueTable table = cusp_values(b16[0], 16);
    CHECK(table.level == 16);
    CHECK(table.values.size() == 6);
    for (const Cusp& c : enumerate_cusps(16)) {
        const CycNumber* v = table.find(c);
        REQUIRE(v != nullptr);
        CHECK(*v == cusp_value(b16[0], c));
    }
    CHECK(table.find(make_cusp(1, 5)) == nullptr);
}

TEST_CASE("expansion decomposition recovers a planted combination") {
    std::vector<EisElement> b16 = basis_gamma0_prime_power(2, 4);
    const long long T = 120;
    FourierSeries target =
        expansion(b16[0], frac(T)).scaled(frac(3, 2)) +
        expansion(b16[3], frac(T)).scaled(frac(-7));
    DecomposeReport rep = decompose_by_expansion(target, b16, {}, frac(T));
    REQUIRE(rep.consistent);
    CHECK(rep.exact);
    CHECK_FALSE(rep.underdetermined);
    CHECK(rep.rank == 5);
    CHECK(rep.coeffs[0] == frac(3, 2));
    CHECK(rep.coeffs[1] == 0);
    CHECK(rep.coeffs[2] == 0);
    CHECK(rep.coeffs[3] == frac(-7));
    CHECK(rep.coeffs[4] == 0);
    // a target outside the span is reported inconsistent or inexact
    FourierSeries off = target + eta_product(6, 4, frac(T));
    DecomposeReport bad = decompose_by_expansion(off, b16, {}, frac(T));
    CHECK_FALSE((bad.consistent && bad.exact));
}

TEST_CASE("cusp value decomposition solves the sixteen table") {
    std::vector<EisElement> b16 = basis_gamma0_prime_power(2, 4);
    DecomposeReport rep = decompose_by_cusp_values(theta16_cusp_table(), b16);
    REQUIRE(rep.consistent);
    CHECK(rep.exact);
    for (int i = 0; i < 4; ++i) CHECK(rep.coeffs[i] == 0);
    CHECK(rep.coeffs[4] == frac(16));
}

TEST_CASE("element words render the operator calculus") {
    std::vector<EisElement> b36 = spanning_set_gamma0(36);
    CHECK(by_label(b36, "B10").word().find("S(2,1)") != std::string::npos);
    CHECK(by_label(b36, "B9").word().find("V(4)") != std::string::npos);
    CHECK(element_level(by_label(b36, "B1")) == 36);
    for (const EisElement& e : b36) CHECK(36 % element_level(e) == 0);
}
