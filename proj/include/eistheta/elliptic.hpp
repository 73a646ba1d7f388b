#pragma once

#include "eistheta/golden.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace eistheta {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
// integer coefficients, studied mod p. Coefficients are kept as given; the
// counting routines reduce them.
struct CurveModP {
    long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    long long p = 2;
};

CurveModP reduce_curve(const std::array<long long, 5>& a, long long p);

// y^2 = x^3 + 1, the curve attached to r_{1,3}. Its rational torsion is
// Z/6Z, so 6 | N_p(1) at every good prime (spot-tested, not computed here).
inline constexpr std::array<long long, 5> curve_x3_plus_1{0, 0, 0, 0, 1};

// Standard invariants of the integral model (not reduced mod p).
long long curve_discriminant(const CurveModP& c);
long long curve_c4(const CurveModP& c);

enum class Reduction { good, multiplicative, additive };

struct FrobeniusData {
    long long p = 0;
    long long a_p = 0;
    Reduction reduction = Reduction::good;
};

// Classifies the fiber at p and computes the trace: a_p = p + 1 - N_p for
// good reduction, +1/-1 for split/non-split multiplicative, 0 for additive.
// The bad cases come from counting smooth points only.
FrobeniusData frobenius_data(const CurveModP& c);

// |E(F_p)| including the point at infinity; throws on bad reduction.
long long count_points_fp(const CurveModP& c);

// |E(F_{p^2})| counted exhaustively over F_p[t]/(t^2 - r), r the least
// quadratic non-residue mod p; requires p odd and good reduction.
long long count_points_fp2(const CurveModP& c);

// Direct |E(F_{p^k})| for k <= 3. The cubic case costs p^3 and must be
// opted into; k >= 2 requires p odd. k = 1 delegates to count_points_fp.
long long count_points_fpk(const CurveModP& c, int k, bool enable_cubic = false);

// alpha^k + beta^k through a_k = a_{k-1} a_1 - p a_{k-2}, seeds 2 and a_p.
long long trace_power(const FrobeniusData& f, int k);

// N_p(k) = p^k + 1 - trace_power(f, k); good reduction assumed.
long long point_count_pk(const FrobeniusData& f, int k);

// Coefficient a_{p^k} of the attached newform: the same three-term
// recursion with seeds 1 and a_p at good primes, a_p^k for multiplicative
// reduction, 0 (k >= 1) for additive. a_{p^0} = 1 always.
long long a_prime_power(const FrobeniusData& f, int k);

// One checked identity: rendered sides plus the verdict.
struct CheckResult {
    std::string label;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// 3 * r_{1,3}(p) = N_p(1) on y^2 = x^3 + 1, for p = 1 (mod 6).
CheckResult verify_r13_prime(long long p);

// For p = 1 (mod 6): the three-term relation
//   3 r(p^k) = N_p(k) + [k >= 3] * 3p * r(p^(k-2)),  k = 1..k_max.
// For p = 5 (mod 6): the even-exponent expansion
//   r(p^e) = (1/3) [N_p(e) + p N_p(e-2) + ... + p^(e/2-1) N_p(2)]
// over even e <= k_max. Throws for p <= 3 or p not prime.
std::vector<CheckResult> verify_r13_prime_power(long long p, int k_max);

// Multiplicative decomposition of r_{1,3}(n) over the given factorization
// n = prod p_i^{e_i}, n = 1 (mod 6), with e_i even whenever p_i = 5 (mod 6):
//   r(n) = sum_i (prod_{j>i} sigma1(p_j^{e_j})) (prod_{j<i} a_{p_j^{e_j}}) r(p_i^{e_i}).
CheckResult verify_r13_general(long long n,
                               const std::vector<std::pair<long long, int>>& factorization);

// One reference table row: a*r(p) = c*(p+1) + d*N_p(1) over qualifying
// primes <= bound. Qualifying primes of bad reduction are skipped and
// reported as such.
std::vector<CheckResult> verify_table_relation(const golden::TableRow& row, long long bound);

}  // namespace eistheta
