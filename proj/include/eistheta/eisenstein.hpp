#pragma once

#include "eistheta/linalg.hpp"
#include "eistheta/modular.hpp"
#include "eistheta/qseries.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eistheta {

enum class AtomKind { sieve, sieve_v, v, combo };

// One operator word applied to the weight-2 series E2 = 1 - 24 sum sigma1(n) q^n:
//   sieve     S(M,m):      keep the terms q^n with n == m (mod M)
//   sieve_v   S(M,m)|V(d): sieve, then rescale q^n -> q^(d*n)
//   v         V(d):        rescale alone
//   combo     C(p,e) = p*V(p*e) - S(p,0)|V(e) for a prime p
struct EisAtom {
    AtomKind kind = AtomKind::v;
    long long M = 1;   // sieve modulus; must divide 24
    long long m = 0;   // sieve residue, stored reduced mod M
    Rational d = 1;    // V parameter; the e of a combo
    long long p = 0;   // combo prime

    static EisAtom sieve_atom(long long M, long long m);
    static EisAtom sieve_v_atom(long long M, long long m, const Rational& d);
    static EisAtom v_atom(const Rational& d);
    static EisAtom combo_atom(long long p, const Rational& e);

    // Smallest Gamma_0 level the atom lives on: M^2 for S(M,m), M^2*d for
    // S(M,m)|V(d), p^2*e for C(p,e); the product must be an integer. A bare
    // V(d) has no level of its own and throws.
    long long level() const;
    // Exact q-expansion on [0, trunc).
    FourierSeries expansion(const Rational& trunc) const;
    // Value at a cusp; at infinity this is the constant Fourier coefficient.
    CycNumber cusp_value(const Cusp& cusp) const;
    std::string str() const;
};

// Rational combination of atoms tagged with a display label.
struct EisElement {
    std::string label;
    std::vector<std::pair<Rational, EisAtom>> terms;
    std::string word() const;
};

FourierSeries expansion(const EisElement& e, const Rational& trunc);
CycNumber cusp_value(const EisElement& e, const Cusp& cusp);
// lcm of the atom levels.
long long element_level(const EisElement& e);

struct CuspValueTable {
    long long level = 1;
    std::vector<std::pair<Cusp, CycNumber>> values;
    const CycNumber* find(const Cusp& c) const;
};

// Values at every cusp class of Gamma_0(N); element_level(e) must divide N.
CuspValueTable cusp_values(const EisElement& e, long long N);

// Requested basis parameters outside the constructible range.
struct NotConstructible : std::domain_error {
    using std::domain_error::domain_error;
};

// Basis of the weight-2 Eisenstein space on Gamma_0(p^k), labeled
// E{p^k}_1 .. E{p^k}_dim. Constructible for k = 1 (any prime), p = 2 with
// k <= 7, and p = 3 with k <= 3; otherwise throws NotConstructible.
std::vector<EisElement> basis_gamma0_prime_power(long long p, long long k);

// Spanning sets for the composite levels 36 (labels B1..B12, one relation)
// and 144 (labels A1..A30).
std::vector<EisElement> spanning_set_gamma0(long long N);

// Cusp-form columns used alongside the spanning sets when decomposing:
// none at level 16, eta(6t)^4 at level 36, and its V(1), V(2), V(4) images
// at level 144.
std::vector<FourierSeries> cuspform_columns_gamma0(long long N, const Rational& trunc);

// Coefficient matrix of the elements on the union of their supports below
// trunc: one row per (exponent, coordinate) pair, one column per element.
RatMatrix expansion_matrix(const std::vector<EisElement>& elements, const Rational& trunc);

struct DecomposeReport {
    bool consistent = false;       // the linear system has a solution
    bool underdetermined = false;  // free variables were pinned to zero
    long long rank = 0;
    std::vector<Rational> coeffs;       // one per element
    std::vector<Rational> cusp_coeffs;  // one per cusp-form column
    bool exact = false;                 // recombination reproduces the target
    std::optional<Rational> first_mismatch;  // expansion flavor, when not exact
    std::optional<Cusp> mismatch_cusp;       // cusp-value flavor, when not exact
};

// Solve target = sum coeffs[i]*elements[i] + sum cusp_coeffs[j]*cuspforms[j]
// exactly on [0, trunc), matching each of the 8 power-basis coordinates.
DecomposeReport decompose_by_expansion(const FourierSeries& target,
                                       const std::vector<EisElement>& elements,
                                       const std::vector<FourierSeries>& cuspforms,
                                       const Rational& trunc);

// Same solve against values at the cusps of Gamma_0(target.level); the
// target table must contain every canonical cusp of that level.
DecomposeReport decompose_by_cusp_values(const CuspValueTable& target,
                                         const std::vector<EisElement>& elements);

// Cusp values of theta(2t)^4 on Gamma_0(16), where theta is the unary theta
// series 1 + 2q + 2q^4 + ...; equals 16 times the E16_5 row.
CuspValueTable theta16_cusp_table();

}  // namespace eistheta
