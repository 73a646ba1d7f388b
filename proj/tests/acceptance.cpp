// Acceptance gate: twelve exact criteria, one [PASS]/[FAIL] line each.
// Five criteria compare against stored reference values that disagree with
// exact recomputation (a handful of table cells, one linear-dependency row
// and its rank, and two relation rows that miss a factor 3); those cases are
// flagged reference_discrepancy in the suite reports and the criteria stay
// red rather than being loosened.
#include "eistheta/eisenstein.hpp"
#include "eistheta/elliptic.hpp"
#include "eistheta/modular.hpp"
#include "eistheta/quadform.hpp"
#include "eistheta/verify.hpp"

#include <chrono>
#include <iostream>
#include <string>

using namespace eistheta;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << label;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

std::string counts(const SuiteReport& r) {
    return r.suite + " " + std::to_string(r.passed) + " passed, " +
           std::to_string(r.failed) + " failed";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const SuiteCase* find_case(const SuiteReport& r, const std::string& prefix) {
    for (const SuiteCase& c : r.cases)
        if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport appendix_a = run_suite("appendix-a");
    SuiteReport appendix_b = run_suite("appendix-b");
    double appendix_time = seconds_since(t0);
    criterion(1, "reference expansions of every labeled element match within 10 s",
              appendix_a.failed == 0 && appendix_b.failed == 0 && appendix_time < 10.0,
              counts(appendix_a) + "; " + counts(appendix_b) + "; " +
                  std::to_string(appendix_time) + " s");

    SuiteReport appendix_c = run_suite("appendix-c");
    criterion(2, "all 30 reference cusp-value cells at level 16 match",
              appendix_c.failed == 0, counts(appendix_c));

    SuiteReport appendix_d = run_suite("appendix-d");
    criterion(3, "all 132 reference cusp-value cells at level 36 match",
              appendix_d.failed == 0, counts(appendix_d));

    bool dims = cusp_count(16) == 6 && cusp_count(36) == 12 && cusp_count(144) == 24 &&
                eisenstein_dim(16) == 5 && eisenstein_dim(36) == 11 &&
                eisenstein_dim(144) == 23;
    for (long long p : {2, 3, 5, 7})
        for (long long k = 1; k <= 7; ++k) {
            long long pk = 1;
            for (long long i = 0; i < k; ++i) pk *= p;
            dims = dims && eisenstein_dim_prime_power(p, k) == eisenstein_dim(pk);
        }
    criterion(4, "cusp counts, dimensions, and the prime power closed form", dims);

    SuiteReport linrel = run_suite("linrel-36");
    const SuiteCase* stored = find_case(linrel, "stored dependency");
    const SuiteCase* rank = find_case(linrel, "spanning set rank");
    criterion(5, "stored level 36 dependency vanishes to 300 terms and rank is 11",
              stored != nullptr && stored->pass && rank != nullptr && rank->pass,
              counts(linrel));

    SuiteReport theta = run_suite("theta-decompositions");
    criterion(6, "theta series decompose with the stored coefficients",
              theta.failed == 0, counts(theta));

    auto t7 = std::chrono::steady_clock::now();
    SuiteReport closed = run_suite("closed-forms");
    double closed_time = seconds_since(t7);
    criterion(7, "closed forms equal enumeration for all 15 cases, n <= 5000, within 2 min",
              closed.failed == 0 && closed_time < 120.0,
              counts(closed) + "; " + std::to_string(closed_time) + " s");

    VerifyConfig sweep;
    sweep.bound = 200;
    SuiteReport primes = run_suite("r13-prime", sweep);
    bool headline = primes.failed == 0 &&
                    representation_count(four_squares_form(1, 3), 103) == 28 &&
                    count_points_fp(reduce_curve(curve_x3_plus_1, 103)) == 84;
    criterion(8, "3*r(p) equals the point count for p = 1 (mod 6) up to 200", headline,
              counts(primes));

    SuiteReport powers = run_suite("r13-power");
    criterion(9, "prime power recursions at 7^k, 13^k, 5^k, 11^k", powers.failed == 0,
              counts(powers));

    SuiteReport general = run_suite("r13-general");
    criterion(10, "multiplicative decomposition on the six composite samples",
              general.failed == 0, counts(general));

    SuiteReport tables = run_suite("tables", sweep);
    criterion(11, "all seven table relations for qualifying primes up to 200",
              tables.failed == 0, counts(tables));

    SuiteReport sieve = run_suite("sieve-properties");
    SuiteReport curve = run_suite("curve-properties");
    criterion(12, "sieve and curve property sweeps",
              sieve.failed == 0 && curve.failed == 0,
              counts(sieve) + "; " + counts(curve));

    std::cout << (12 - failures) << " of 12 criteria green\n";
    if (failures > 0)
        std::cout << "red criteria compare against stored reference cells flagged "
                     "reference_discrepancy in the suite reports\n";
    return failures == 0 ? 0 : 1;
}
