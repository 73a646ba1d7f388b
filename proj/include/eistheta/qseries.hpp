#pragma once

#include "eistheta/cyclotomic.hpp"

#include <map>
#include <optional>
#include <vector>

namespace eistheta {

// Sum of positive divisors; n >= 1.
long long sigma1(long long n);

// table[n] = sigma1(n) for 1 <= n <= n_max (table[0] = 0), filled by a
// divisor sieve in O(n log n). Callers keep the table; reads are shareable.
std::vector<long long> sigma1_table(long long n_max);

// Truncated q-expansion with exponents in (1/delta)*Z for some delta | 24.
// Internal keys are exponent numerators on the delta-lattice: the term at key
// n is coeff * q^(n/delta). Invariants: 0 <= key < trunc*delta, no zero
// coefficients stored, delta minimal for the stored support after every
// operation. trunc is exclusive: the series is exact on [0, trunc).
class FourierSeries {
  public:
    FourierSeries() = default;
    FourierSeries(long long delta, const Rational& trunc);

    long long delta() const { return delta_; }
    const Rational& trunc() const { return trunc_; }
    const std::map<long long, CycNumber>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Smallest exponent in the support; equals trunc for the zero series.
    Rational low() const;
    // Exact coefficient at exponent e; throws if e >= trunc.
    CycNumber coeff(const Rational& e) const;
    CycNumber coeff_int(long long n) const { return coeff(frac(n)); }
    // Requires den(e) | delta and 0 <= e < trunc.
    void set_coeff(const Rational& e, const CycNumber& v);

    FourierSeries operator+(const FourierSeries& o) const;
    FourierSeries operator-(const FourierSeries& o) const;
    FourierSeries operator*(const FourierSeries& o) const;
    FourierSeries scaled(const CycNumber& s) const;
    FourierSeries scaled(const Rational& s) const { return scaled(CycNumber(s)); }

    // Keep the terms q^n with n == m (mod M); requires integral support.
    FourierSeries sieve(long long M, long long m) const;
    // q^n -> q^(d*n) for rational d > 0; every image exponent must have
    // denominator dividing 24. Truncation scales to d*trunc.
    FourierSeries v_operator(const Rational& d) const;
    // Multiply the coefficient of q^e by zeta_M^(j*e); each zeta_M^(j*e)
    // must land in the 24th roots of unity.
    FourierSeries shift_character(long long j, long long M) const;

    // Restrict the window to [0, t); t <= trunc.
    FourierSeries truncate_to(const Rational& t) const;

  private:
    void normalize();
    long long delta_ = 1;
    Rational trunc_ = 0;
    std::map<long long, CycNumber> terms_;

    friend FourierSeries add(const FourierSeries&, const FourierSeries&);
    friend FourierSeries mul(const FourierSeries&, const FourierSeries&);
};

inline FourierSeries add(const FourierSeries& f, const FourierSeries& g) { return f + g; }
inline FourierSeries mul(const FourierSeries& f, const FourierSeries& g) { return f * g; }
inline FourierSeries scale(const FourierSeries& f, const CycNumber& s) { return f.scaled(s); }
inline FourierSeries sieve(const FourierSeries& f, long long M, long long m) {
    return f.sieve(M, m);
}
inline FourierSeries v_operator(const FourierSeries& f, const Rational& d) {
    return f.v_operator(d);
}
inline FourierSeries shift_character(const FourierSeries& f, long long j, long long M) {
    return f.shift_character(j, M);
}

// 1 - 24 * sum_{n>=1} sigma1(n) q^n on [0, trunc).
FourierSeries e2_holomorphic(const Rational& trunc);

// q^(a*e/24) * prod_{n>=1} (1 - q^(a*n))^e for a >= 1, e >= 1.
FourierSeries eta_product(long long a, long long e, const Rational& trunc);

// kind 2: sum_{n in Z} q^((2n+1)^2/8); kind 3: sum_{n in Z} q^(n^2/2).
FourierSeries jacobi_theta(int kind, const Rational& trunc);

// Exact coefficient comparison on [0, T); requires T <= both truncations.
bool equal_prefix(const FourierSeries& f, const FourierSeries& g, const Rational& T);
std::optional<Rational> first_mismatch(const FourierSeries& f, const FourierSeries& g,
                                       const Rational& T);

// a(1..n_max) for eta(6*tau)^4 = sum a(n) q^n, as plain integers. a(0) = 0.
std::vector<long long> eta6_quartic_coeffs(long long n_max);

}  // namespace eistheta
