#include "eistheta/verify.hpp"

#include "eistheta/eisenstein.hpp"
#include "eistheta/elliptic.hpp"
#include "eistheta/golden.hpp"
#include "eistheta/modular.hpp"
#include "eistheta/quadform.hpp"

#include "json.hpp"

#include <atomic>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace eistheta {

namespace {

using Job = std::function<std::vector<SuiteCase>()>;

// Jobs are pure; results land by job index, so the flattened list is the
// same for every worker count and schedule.
std::vector<SuiteCase> run_jobs(const std::vector<Job>& jobs, int workers) {
    std::vector<std::vector<SuiteCase>> results(jobs.size());
    if (workers <= 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    } else {
        std::atomic<size_t> next{0};
        std::mutex err_mutex;
        std::exception_ptr err;
        size_t n = std::min(static_cast<size_t>(workers), jobs.size());
        std::vector<std::thread> pool;
        for (size_t w = 0; w < n; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= results.size()) return;
                    try {
                        results[i] = jobs[i]();
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mutex);
                        if (!err) err = std::current_exception();
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }
    std::vector<SuiteCase> flat;
    for (auto& r : results) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

SuiteReport finish(std::string suite, std::vector<SuiteCase> cases) {
    SuiteReport r;
    r.suite = std::move(suite);
    r.cases = std::move(cases);
    for (const SuiteCase& c : r.cases) ++(c.pass ? r.passed : r.failed);
    return r;
}

SuiteCase cyc_case(std::string name, const CycNumber& expected, const CycNumber& actual,
                   std::string flag = "") {
    return SuiteCase{std::move(name), expected.str(), actual.str(), expected == actual,
                     std::move(flag)};
}

SuiteCase rat_case(std::string name, const Rational& expected, const Rational& actual) {
    return SuiteCase{std::move(name), rational_str(expected), rational_str(actual),
                     expected == actual, ""};
}

SuiteCase int_case(std::string name, long long expected, long long actual,
                   std::string flag = "") {
    return SuiteCase{std::move(name), std::to_string(expected), std::to_string(actual),
                     expected == actual, std::move(flag)};
}

SuiteCase bool_case(std::string name, bool ok, std::string expected, std::string failed) {
    SuiteCase c;
    c.name = std::move(name);
    c.expected = expected;
    c.actual = ok ? std::move(expected) : std::move(failed);
    c.pass = ok;
    return c;
}

// Aggregated sweep: expected describes the scope, a violation replaces it.
SuiteCase sweep_case(std::string name, std::string scope,
                     const std::optional<std::string>& violation) {
    SuiteCase c;
    c.name = std::move(name);
    c.expected = scope;
    c.actual = violation.value_or(scope);
    c.pass = !violation.has_value();
    return c;
}

SuiteCase series_case(std::string name, const FourierSeries& lhs, const FourierSeries& rhs,
                      const Rational& T, std::string flag = "") {
    SuiteCase c;
    c.name = std::move(name);
    c.expected = "identical below q^" + rational_str(T);
    std::optional<Rational> mm = first_mismatch(lhs, rhs, T);
    c.actual = mm ? "first mismatch at q^" + rational_str(*mm) : c.expected;
    c.pass = !mm.has_value();
    c.flag = std::move(flag);
    return c;
}

SuiteCase from_check(const CheckResult& c) {
    return SuiteCase{c.label, c.expected, c.actual, c.pass, ""};
}

long long int_coeff(const FourierSeries& f, long long n) {
    CycNumber c = f.coeff_int(n);
    if (!c.is_rational()) throw std::logic_error("int_coeff: coefficient is not rational");
    Rational r = c.rational_part();
    if (r.get_den() != 1) throw std::logic_error("int_coeff: coefficient is not an integer");
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("int_coeff: overflow");
    return r.get_num().get_si();
}

long long cusp_width(const Cusp& c, long long N) {
    if (c.is_infinity()) return 1;
    return N / std::gcd(c.k * c.k, N);
}

// Total residue of a holomorphic weight-2 form vanishes: the width-weighted
// sum of values over all cusp classes must be exactly zero.
SuiteCase residue_case(const EisElement& e, long long N) {
    CycNumber total;
    for (const Cusp& c : enumerate_cusps(N)) total += cusp_value(e, c) * frac(cusp_width(c, N));
    SuiteCase out;
    out.name = e.label + " width-weighted cusp values sum to 0 on level " +
               std::to_string(N);
    out.expected = "0";
    out.actual = total.str();
    out.pass = total.is_zero();
    return out;
}

const EisElement& by_label(const std::vector<EisElement>& v, const std::string& label) {
    for (const EisElement& e : v)
        if (e.label == label) return e;
    throw std::logic_error("no element labeled " + label);
}

// ---- appendix-a ---------------------------------------------------------

std::vector<Job> jobs_appendix_a() {
    std::set<std::pair<std::string, long long>> flagged;
    for (const auto& cell : golden::reference_expansion_discrepancies())
        flagged.insert({cell.label, cell.exponent});
    std::vector<Job> jobs;
    for (const golden::ReferenceSeries& row : golden::reference_expansions())
        jobs.push_back([row, flagged] {
            long long level = 0, idx = 0;
            if (std::sscanf(row.label.c_str(), "E%lld_%lld", &level, &idx) != 2)
                throw std::logic_error("bad reference label " + row.label);
            long long k = 0;
            for (long long v = level; v > 1; v /= 2) ++k;
            std::vector<EisElement> basis = basis_gamma0_prime_power(2, k);
            const EisElement& elt = basis.at(static_cast<size_t>(idx - 1));
            long long maxe = 0;
            for (const auto& [e, c] : row.monomials) maxe = std::max(maxe, e);
            FourierSeries f = expansion(elt, frac(maxe + 1));
            std::vector<SuiteCase> out;
            for (const auto& [e, c] : row.monomials) {
                std::string flag =
                    flagged.count({row.label, e}) ? "reference_discrepancy" : "";
                out.push_back(cyc_case(row.label + " q^" + std::to_string(e),
                                       CycNumber(frac(c)), f.coeff(frac(e)), flag));
            }
            return out;
        });
    return jobs;
}

// ---- appendix-b ---------------------------------------------------------

// First basis element at prime level: 1 - (24/(p-1)) sum (p sigma1(n) - sigma1(pn)) q^n.
FourierSeries prime_level_series(long long p, long long T) {
    FourierSeries f(1, frac(T));
    f.set_coeff(frac(0), CycNumber(frac(1)));
    for (long long n = 1; n < T; ++n) {
        Rational v = frac(-24, p - 1) * frac(p * sigma1(n) - sigma1(p * n));
        f.set_coeff(frac(n), CycNumber(v));
    }
    return f;
}

std::vector<Job> jobs_appendix_b() {
    std::vector<Job> jobs;
    for (long long p : {2, 3, 5, 7, 13})
        jobs.push_back([p]() -> std::vector<SuiteCase> {
            std::vector<EisElement> basis = basis_gamma0_prime_power(p, 1);
            constexpr long long T = 60;
            return {series_case(basis[0].label + " matches its divisor-sum expansion",
                                prime_level_series(p, T), expansion(basis[0], frac(T)),
                                frac(T))};
        });
    for (long long k : {2, 3})
        jobs.push_back([k] {
            long long n = k == 2 ? 9 : 27;
            std::vector<EisElement> basis = basis_gamma0_prime_power(3, k);
            std::vector<SuiteCase> out;
            Cusp inf = make_cusp(1, 0);
            for (const EisElement& e : basis)
                out.push_back(cyc_case(e.label + " constant term equals value at infinity",
                                       cusp_value(e, inf),
                                       expansion(e, frac(10)).coeff(frac(0))));
            out.push_back(int_case("level " + std::to_string(n) + " basis rank",
                                   eisenstein_dim(n),
                                   matrix_rank(expansion_matrix(basis, frac(200)))));
            for (const EisElement& e : basis) out.push_back(residue_case(e, n));
            return out;
        });
    jobs.push_back([]() {
        // The two sieved level-9 elements push forward to level 27 under V_3.
        std::vector<EisElement> b9 = basis_gamma0_prime_power(3, 2);
        std::vector<EisElement> b27 = basis_gamma0_prime_power(3, 3);
        constexpr long long T = 201;
        std::vector<SuiteCase> out;
        for (int i : {1, 2}) {
            FourierSeries image = expansion(b9[i], frac(T, 3)).v_operator(frac(3));
            out.push_back(series_case(b27[i + 2].label + " is " + b9[i].label +
                                          " rescaled by V(3)",
                                      image, expansion(b27[i + 2], frac(T)), frac(T)));
        }
        return out;
    });
    return jobs;
}

// ---- appendix-c / appendix-d -------------------------------------------

std::vector<Job> jobs_cusp_table(long long N, std::vector<EisElement> elements,
                                 std::vector<golden::ReferenceCuspRow> rows,
                                 const std::vector<golden::CuspCell>& flagged_cells) {
    std::set<std::pair<std::string, Cusp>> flagged;
    for (const golden::CuspCell& c : flagged_cells) flagged.insert({c.label, c.cusp});
    std::vector<Job> jobs;
    for (const golden::ReferenceCuspRow& row : rows)
        jobs.push_back([row, elements, flagged] {
            const EisElement& elt = by_label(elements, row.label);
            std::vector<SuiteCase> out;
            for (const auto& [cusp, stored] : row.cells) {
                std::string flag =
                    flagged.count({row.label, cusp}) ? "reference_discrepancy" : "";
                out.push_back(cyc_case(row.label + " @ " + cusp_str(cusp), stored,
                                       cusp_value(elt, cusp), flag));
            }
            return out;
        });
    jobs.push_back([N, elements] {
        std::vector<SuiteCase> out;
        for (const EisElement& e : elements) out.push_back(residue_case(e, N));
        return out;
    });
    return jobs;
}

// ---- linrel-36 ----------------------------------------------------------

std::vector<Job> jobs_linrel_36() {
    return {[]() {
        constexpr long long T = 300;
        std::vector<EisElement> elems = spanning_set_gamma0(36);
        std::vector<FourierSeries> ex;
        ex.reserve(elems.size());
        for (const EisElement& e : elems) ex.push_back(expansion(e, frac(T)));
        auto relation = [&](std::string name, const std::vector<Rational>& v,
                            std::string flag = "") {
            FourierSeries acc(1, frac(T));
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) acc = acc + ex[i].scaled(v[i]);
            return series_case(std::move(name), acc, FourierSeries(1, frac(T)), frac(T),
                               std::move(flag));
        };

        std::vector<SuiteCase> out;
        out.push_back(relation("stored dependency B2+B3+4*B11-3*B12-B9 vanishes",
                               golden::reference_linear_relation_36(),
                               "reference_discrepancy"));
        // The reference rank for the twelve elements is 11, a single
        // dependency.  Exact elimination gives 9: the sigma_1 doubling
        // identity forces two more dependencies, verified below.
        RatMatrix m = expansion_matrix(elems, frac(T));
        out.push_back(int_case("spanning set rank", eisenstein_dim(36), matrix_rank(m),
                               "reference_discrepancy"));
        out.push_back(relation("corrected dependency B2+B3+4*B11-3*B12-B10 vanishes",
                               golden::corrected_linear_relation_36()));
        std::vector<Rational> d1(elems.size()), d2(elems.size());
        d1[1] = 1;
        d1[3] = -1;
        d1[5] = -2;
        d1[7] = 3;
        d2[2] = 1;
        d2[4] = 3;
        d2[6] = -1;
        d2[8] = -2;
        out.push_back(relation("doubling dependency B2-B4-2*B6+3*B8 vanishes", d1));
        out.push_back(relation("doubling dependency B3+3*B5-B7-2*B9 vanishes", d2));
        out.push_back(int_case("dependency space dimension", 3,
                               static_cast<long long>(nullspace_basis(m).size())));
        return out;
    }};
}

// ---- closed-forms -------------------------------------------------------

std::vector<Job> jobs_closed_forms() {
    std::vector<Job> jobs;
    const std::vector<std::pair<long long, long long>> cases = {
        {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4},
        {3, 4}, {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}};
    for (const auto& [s, M] : cases)
        jobs.push_back([s = s, M = M]() -> std::vector<SuiteCase> {
            constexpr long long N = 5000;
            FourierSeries th = theta_series(four_squares_form(s, M), N + 1);
            std::optional<std::string> bad;
            for (long long n = 0; n <= N && !bad; ++n) {
                long long formula = closed_form_r(s, M, n);
                long long count = int_coeff(th, n);
                if (formula != count)
                    bad = "n=" + std::to_string(n) + ": formula " + std::to_string(formula) +
                          ", count " + std::to_string(count);
            }
            return {sweep_case("r_{" + std::to_string(s) + "," + std::to_string(M) +
                                   "} formula vs enumeration",
                               "agree for all n <= 5000", bad)};
        });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        return {int_case("r_{1,2}(12)", 64, closed_form_r(1, 2, 12)),
                int_case("r_{1,3}(25)", 12, closed_form_r(1, 3, 25)),
                int_case("r_{0,3}(9)", 8, closed_form_r(0, 3, 9))};
    });
    return jobs;
}

// ---- theta-decompositions ----------------------------------------------

std::vector<Job> jobs_theta_decompositions() {
    std::vector<Job> jobs;
    jobs.push_back([]() -> std::vector<SuiteCase> {
        constexpr long long T = 400;
        std::vector<EisElement> b16 = basis_gamma0_prime_power(2, 4);
        FourierSeries e1 = expansion(by_label(b16, "E16_1"), frac(T));
        FourierSeries e5 = expansion(by_label(b16, "E16_5"), frac(T));
        return {series_case("theta_{0,2} = E16_1 + 8*E16_5",
                            theta_series(four_squares_form(0, 2), T),
                            e1 + e5.scaled(frac(8)), frac(T)),
                series_case("theta_{1,2} = 16*E16_5",
                            theta_series(four_squares_form(1, 2), T),
                            e5.scaled(frac(16)), frac(T))};
    });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        constexpr long long T = 400;
        std::vector<EisElement> b64 = basis_gamma0_prime_power(2, 6);
        FourierSeries e1 = expansion(by_label(b64, "E64_1"), frac(T));
        FourierSeries e11 = expansion(by_label(b64, "E64_11"), frac(T));
        return {series_case("theta_{0,4} = E64_1 + 8*E64_11",
                            theta_series(four_squares_form(0, 4), T),
                            e1 + e11.scaled(frac(8)), frac(T)),
                series_case("theta_{2,4} = 16*E64_11",
                            theta_series(four_squares_form(2, 4), T),
                            e11.scaled(frac(16)), frac(T))};
    });
    jobs.push_back([]() {
        constexpr long long T = 300;
        FourierSeries target = theta_series(four_squares_form(1, 3), T);
        std::vector<EisElement> elems = spanning_set_gamma0(36);
        elems.resize(11);  // the reference solve uses the pruned list B1..B11
        std::vector<FourierSeries> cusps = cuspform_columns_gamma0(36, frac(T));
        std::vector<SuiteCase> out;
        out.push_back(series_case(
            "theta_{1,3} = (1/3)*B2 - 2*B6 + B8 - (1/3)*eta(6t)^4",
            target,
            expansion(elems[1], frac(T)).scaled(frac(1, 3)) +
                expansion(elems[5], frac(T)).scaled(frac(-2)) +
                expansion(elems[7], frac(T)) + cusps[0].scaled(frac(-1, 3)),
            frac(T)));
        // The doubling dependencies leave B8 and B9 as free columns, so the
        // elimination reports a rank deficiency and returns the pivot-column
        // form of the same decomposition.
        DecomposeReport rep = decompose_by_expansion(target, elems, cusps, frac(T));
        out.push_back(bool_case("theta_{1,3} solve is consistent", rep.consistent,
                                "solvable", "inconsistent system"));
        out.push_back(bool_case("theta_{1,3} solve reports the dependencies",
                                rep.underdetermined, "rank-deficient column set",
                                "full column rank"));
        out.push_back(int_case("theta_{1,3} solve rank", 10, rep.rank));
        out.push_back(rat_case("theta_{1,3} pivot coefficient on B4", frac(1, 3),
                               rep.coeffs[3]));
        out.push_back(rat_case("theta_{1,3} pivot coefficient on B6", frac(-4, 3),
                               rep.coeffs[5]));
        bool rest = true;
        for (size_t i = 0; i < rep.coeffs.size(); ++i)
            if (i != 3 && i != 5) rest = rest && rep.coeffs[i] == 0;
        out.push_back(bool_case("theta_{1,3} remaining pivot coefficients vanish", rest,
                                "all other coefficients 0", "nonzero stray coefficient"));
        out.push_back(rat_case("theta_{1,3} cusp-form coefficient", frac(-1, 3),
                               rep.cusp_coeffs[0]));
        out.push_back(bool_case("theta_{1,3} recombination is exact", rep.exact,
                                "residual 0 below q^300", "nonzero residual"));
        return out;
    });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        constexpr long long T = 600;
        FourierSeries a8 = expansion(by_label(spanning_set_gamma0(144), "A8"), frac(T));
        FourierSeries cusp = eta_product(6, 4, frac(T, 4)).v_operator(frac(4));
        return {series_case("theta_{1,6} = (2/3)*A8 + (1/3)*eta(6t)^4|V(4)",
                            theta_series(four_squares_form(1, 6), T),
                            a8.scaled(frac(2, 3)) + cusp.scaled(frac(1, 3)), frac(T))};
    });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        constexpr long long T = 600;
        return {series_case("theta_{0,6} = theta_{0,3}|V(4)",
                            theta_series(four_squares_form(0, 6), T),
                            theta_series(four_squares_form(0, 3), T / 4).v_operator(frac(4)),
                            frac(T)),
                series_case("theta_{2,6} = theta_{1,3}|V(4)",
                            theta_series(four_squares_form(2, 6), T),
                            theta_series(four_squares_form(1, 3), T / 4).v_operator(frac(4)),
                            frac(T)),
                series_case("theta_{3,6} = theta_{1,2}|V(9)",
                            theta_series(four_squares_form(3, 6), T),
                            theta_series(four_squares_form(1, 2), T / 9 + 1).v_operator(frac(9)),
                            frac(T))};
    });
    jobs.push_back([]() {
        std::vector<EisElement> b16 = basis_gamma0_prime_power(2, 4);
        DecomposeReport rep = decompose_by_cusp_values(theta16_cusp_table(), b16);
        std::vector<SuiteCase> out;
        out.push_back(rat_case("theta_{1,2} cusp solve: coefficient on E16_5", frac(16),
                               rep.coeffs[4]));
        bool rest = true;
        for (size_t i = 0; i + 1 < rep.coeffs.size(); ++i) rest = rest && rep.coeffs[i] == 0;
        out.push_back(bool_case("theta_{1,2} cusp solve: other coefficients vanish", rest,
                                "all other coefficients 0", "nonzero stray coefficient"));
        out.push_back(bool_case("theta_{1,2} cusp solve: recombination exact", rep.exact,
                                "values reproduced at every cusp", "cusp value mismatch"));
        return out;
    });
    return jobs;
}

// ---- r13 suites ---------------------------------------------------------

std::vector<Job> jobs_r13_prime(long long bound) {
    std::vector<Job> jobs;
    for (long long p = 7; p <= bound; ++p)
        if (is_prime(p) && p % 6 == 1)
            jobs.push_back([p]() -> std::vector<SuiteCase> {
                return {from_check(verify_r13_prime(p))};
            });
    return jobs;
}

std::vector<Job> jobs_r13_power() {
    std::vector<Job> jobs;
    const std::vector<std::pair<long long, int>> plan = {{7, 4}, {13, 3}, {5, 4}, {11, 4}};
    for (const auto& [p, kmax] : plan)
        jobs.push_back([p = p, kmax = kmax] {
            std::vector<SuiteCase> out;
            for (const CheckResult& c : verify_r13_prime_power(p, kmax))
                out.push_back(from_check(c));
            return out;
        });
    return jobs;
}

std::vector<Job> jobs_r13_general() {
    using Fact = std::vector<std::pair<long long, int>>;
    const std::vector<std::pair<long long, Fact>> plan = {
        {49, {{7, 2}}},          {91, {{7, 1}, {13, 1}}},  {133, {{7, 1}, {19, 1}}},
        {175, {{5, 2}, {7, 1}}}, {637, {{7, 2}, {13, 1}}}, {931, {{7, 2}, {19, 1}}}};
    std::vector<Job> jobs;
    for (const auto& [n, fact] : plan)
        jobs.push_back([n = n, fact = fact]() -> std::vector<SuiteCase> {
            return {from_check(verify_r13_general(n, fact))};
        });
    return jobs;
}

std::vector<Job> jobs_tables(long long bound) {
    std::vector<Job> jobs;
    for (const golden::TableRow& row : golden::representation_table_rows()) {
        // Exact counting contradicts the stored T1R2/T1R3 normalization (the
        // left side needs a factor 3), so their failures carry the flag.
        bool discrepant = row.name == "T1R2" || row.name == "T1R3";
        jobs.push_back([row, bound, discrepant] {
            std::vector<SuiteCase> out;
            for (const CheckResult& c : verify_table_relation(row, bound)) {
                SuiteCase sc = from_check(c);
                if (discrepant && !sc.pass) sc.flag = "reference_discrepancy";
                out.push_back(std::move(sc));
            }
            return out;
        });
    }
    for (const golden::TableRow& row : golden::corrected_table_rows())
        jobs.push_back([row, bound] {
            std::vector<SuiteCase> out;
            for (const CheckResult& c : verify_table_relation(row, bound))
                out.push_back(from_check(c));
            return out;
        });
    return jobs;
}

// ---- sieve-properties ---------------------------------------------------

std::vector<Job> jobs_sieve_properties() {
    std::vector<Job> jobs;
    jobs.push_back([]() {
        constexpr long long T = 200;
        FourierSeries e2 = e2_holomorphic(frac(T));
        std::vector<SuiteCase> out;
        for (long long M : {1, 2, 3, 4, 6, 8, 12, 24}) {
            FourierSeries acc(1, frac(T));
            for (long long m = 0; m < M; ++m) acc = acc + e2.sieve(M, m);
            out.push_back(series_case("sieve classes partition E2, M=" + std::to_string(M),
                                      acc, e2, frac(T)));
        }
        return out;
    });
    jobs.push_back([]() {
        constexpr long long T = 200;
        FourierSeries e2 = e2_holomorphic(frac(T));
        std::vector<SuiteCase> out;
        for (long long M : {2, 3, 4, 6})
            for (long long m = 0; m < M; ++m) {
                FourierSeries acc(1, frac(T));
                for (long long j = 0; j < M; ++j) {
                    long long r = (((-j * m) % M) + M) % M;
                    acc = acc + e2.shift_character(j, M).scaled(CycNumber::zeta_power(M, r));
                }
                out.push_back(series_case("roots-of-unity filter M=" + std::to_string(M) +
                                              " m=" + std::to_string(m),
                                          acc.scaled(frac(1, M)), e2.sieve(M, m), frac(T)));
            }
        return out;
    });
    jobs.push_back([]() {
        constexpr long long T = 200;
        FourierSeries half = e2_holomorphic(frac(T, 2));
        FourierSeries full = e2_holomorphic(frac(T));
        std::vector<SuiteCase> out;
        for (long long k : {1, 2, 3})
            for (long long l = 1; l < (1LL << k); l += 2)
                out.push_back(series_case(
                    "E2|S(2^" + std::to_string(k) + "," + std::to_string(l) +
                        ")|V(2) = (1/3) E2|S(2^" + std::to_string(k + 1) + "," +
                        std::to_string(2 * l) + ")",
                    half.sieve(1LL << k, l).v_operator(frac(2)),
                    full.sieve(2LL << k, 2 * l).scaled(frac(1, 3)), frac(T)));
        return out;
    });
    return jobs;
}

// ---- curve-properties ---------------------------------------------------

struct NamedCurve {
    const char* name;
    std::array<long long, 5> a;
};

const std::vector<NamedCurve>& reference_curves() {
    static const std::vector<NamedCurve> curves = {
        {"y^2=x^3+1", {0, 0, 0, 0, 1}},
        {"y^2=x^3+4x", {0, 0, 0, 4, 0}},
        {"y^2+y=x^3", {0, 0, 1, 0, 0}},
        {"y^2+xy+y=x^3-x", {1, 0, 1, -1, 0}},
    };
    return curves;
}

std::vector<Job> jobs_curve_properties() {
    std::vector<Job> jobs;
    for (const NamedCurve& nc : reference_curves())
        jobs.push_back([nc]() -> std::vector<SuiteCase> {
            std::optional<std::string> bad;
            for (long long p = 2; p < 500 && !bad; ++p) {
                if (!is_prime(p)) continue;
                CurveModP c = reduce_curve(nc.a, p);
                if (curve_discriminant(c) % p == 0) continue;
                long long a = frobenius_data(c).a_p;
                if (a * a > 4 * p)
                    bad = "p=" + std::to_string(p) + ": a_p=" + std::to_string(a);
            }
            return {sweep_case(std::string("Hasse bound on ") + nc.name,
                               "a_p^2 <= 4p for every good p < 500", bad)};
        });
    for (const NamedCurve& nc : reference_curves())
        jobs.push_back([nc]() -> std::vector<SuiteCase> {
            std::optional<std::string> bad;
            for (long long p = 3; p < 60 && !bad; ++p) {
                if (!is_prime(p)) continue;
                CurveModP c = reduce_curve(nc.a, p);
                if (curve_discriminant(c) % p == 0) continue;
                long long direct = count_points_fp2(c);
                long long recursed = point_count_pk(frobenius_data(c), 2);
                if (direct != recursed)
                    bad = "p=" + std::to_string(p) + ": " + std::to_string(direct) + " vs " +
                          std::to_string(recursed);
            }
            return {sweep_case(std::string("degree-2 count matches trace recursion on ") +
                                   nc.name,
                               "N_p(2) agrees for every good odd p < 60", bad)};
        });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        std::optional<std::string> bad;
        for (long long p = 5; p < 500 && !bad; ++p) {
            if (!is_prime(p) || p % 6 != 5) continue;
            long long a = frobenius_data(reduce_curve(curve_x3_plus_1, p)).a_p;
            if (a != 0) bad = "p=" + std::to_string(p) + ": a_p=" + std::to_string(a);
        }
        return {sweep_case("inert primes have trace 0 on y^2=x^3+1",
                           "a_p = 0 for every p = 5 (mod 6), p < 500", bad)};
    });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        std::optional<std::string> bad;
        for (long long p = 2; p <= 2000 && !bad; ++p) {
            if (!is_prime(p)) continue;
            FrobeniusData f = frobenius_data(reduce_curve(curve_x3_plus_1, p));
            int k = 1;
            for (long long pk = p; pk <= 2000 && !bad; pk *= p, ++k) {
                long long lhs = a_prime_power(f, k);
                long long rhs = eta6_coefficient(pk);
                if (lhs != rhs)
                    bad = "p^k=" + std::to_string(pk) + ": recursion " + std::to_string(lhs) +
                          ", eta coefficient " + std::to_string(rhs);
            }
        }
        return {sweep_case("newform recursion matches eta(6t)^4 coefficients",
                           "a_{p^k} agrees for every p^k <= 2000", bad)};
    });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        std::optional<std::string> bad;
        for (long long p = 7; p < 500 && !bad; ++p) {
            if (!is_prime(p) || p % 6 != 1) continue;
            long long n = count_points_fp(reduce_curve(curve_x3_plus_1, p));
            if (n % 12 != 0) bad = "p=" + std::to_string(p) + ": N=" + std::to_string(n);
        }
        return {sweep_case("12 divides N_p(1) on y^2=x^3+1",
                           "12 | N_p(1) for every p = 1 (mod 6), p < 500", bad)};
    });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        std::optional<std::string> bad;
        for (long long p : {7, 13}) {
            FrobeniusData f = frobenius_data(reduce_curve(curve_x3_plus_1, p));
            for (int m = 1; m <= 3 && !bad; ++m) {
                long long pm = 1;
                for (int i = 0; i < m; ++i) pm *= p;
                long long lhs = 3 * representation_count(four_squares_form(1, 3), pm);
                long long rhs = point_count_pk(f, m);
                if ((lhs - rhs) % p != 0)
                    bad = "p=" + std::to_string(p) + " m=" + std::to_string(m);
            }
        }
        return {sweep_case("3*r_{1,3}(p^m) = N_p(m) (mod p)",
                           "congruence holds for p in {7,13}, m <= 3", bad)};
    });
    jobs.push_back([]() -> std::vector<SuiteCase> {
        std::optional<std::string> bad;
        for (long long p = 5; p < 100 && !bad; ++p) {
            if (!is_prime(p)) continue;
            long long n = count_points_fp(reduce_curve(curve_x3_plus_1, p));
            if (n % 6 != 0) bad = "p=" + std::to_string(p) + ": N=" + std::to_string(n);
        }
        return {sweep_case("rational 6-torsion injects into good fibers",
                           "6 | N_p(1) for every good p < 100", bad)};
    });
    return jobs;
}

}  // namespace

const std::vector<std::string>& suite_registry() {
    static const std::vector<std::string> names = {
        "appendix-a",  "appendix-b",   "appendix-c",           "appendix-d",
        "linrel-36",   "closed-forms", "theta-decompositions", "r13-prime",
        "r13-power",   "r13-general",  "tables",               "sieve-properties",
        "curve-properties"};
    return names;
}

std::vector<std::string> resolve_suites(const std::string& selection) {
    if (selection == "all") return suite_registry();
    if (selection == "appendix")
        return {"appendix-a", "appendix-b", "appendix-c", "appendix-d"};
    for (const std::string& name : suite_registry())
        if (name == selection) return {selection};
    std::string known = "all, appendix";
    for (const std::string& name : suite_registry()) known += ", " + name;
    throw std::invalid_argument("unknown suite '" + selection + "' (known: " + known + ")");
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
    std::vector<Job> jobs;
    if (name == "appendix-a") {
        jobs = jobs_appendix_a();
    } else if (name == "appendix-b") {
        jobs = jobs_appendix_b();
    } else if (name == "appendix-c") {
        jobs = jobs_cusp_table(16, basis_gamma0_prime_power(2, 4),
                               golden::reference_cusp_table_16(),
                               golden::reference_cusp_table_16_discrepancies());
    } else if (name == "appendix-d") {
        jobs = jobs_cusp_table(36, spanning_set_gamma0(36), golden::reference_cusp_table_36(),
                               golden::reference_cusp_table_36_discrepancies());
    } else if (name == "linrel-36") {
        jobs = jobs_linrel_36();
    } else if (name == "closed-forms") {
        jobs = jobs_closed_forms();
    } else if (name == "theta-decompositions") {
        jobs = jobs_theta_decompositions();
    } else if (name == "r13-prime") {
        jobs = jobs_r13_prime(cfg.bound);
    } else if (name == "r13-power") {
        jobs = jobs_r13_power();
    } else if (name == "r13-general") {
        jobs = jobs_r13_general();
    } else if (name == "tables") {
        jobs = jobs_tables(cfg.bound);
    } else if (name == "sieve-properties") {
        jobs = jobs_sieve_properties();
    } else if (name == "curve-properties") {
        jobs = jobs_curve_properties();
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return finish(name, run_jobs(jobs, cfg.workers));
}

std::string to_json_string(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["tolerance"] = 0;
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const SuiteCase& c : report.cases) {
        nlohmann::ordered_json e;
        e["case"] = c.name;
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        e["pass"] = c.pass;
        if (!c.flag.empty()) e["flag"] = c.flag;
        cases.push_back(e);
    }
    j["cases"] = std::move(cases);
    return j.dump(2);
}

}  // namespace eistheta
