#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace eistheta {

using Rational = mpq_class;

// mpq_class(n, d) does not reduce; this does.
inline Rational frac(long long num, long long den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Element of Q(zeta_24) in the power basis 1, z, z^2, ..., z^7 where
// z = exp(2*pi*i/24), reduced modulo Phi_24(x) = x^8 - x^4 + 1.
// Coordinates are exact rationals; there is no floating point anywhere.
class CycNumber {
  public:
    CycNumber() = default;
    explicit CycNumber(const Rational& r) { c_[0] = r; }
    explicit CycNumber(long long n) { c_[0] = frac(n); }

    // zeta_M^j for M | 24, any integer j (reduced mod M).
    static CycNumber zeta_power(long long M, long long j);
    // a + b*i + c*w with i = z^6 and w = i*sqrt(3) = 2*z^4 - 1.
    static CycNumber from_iw(const Rational& a, const Rational& b, const Rational& c);

    const std::array<Rational, 8>& coords() const { return c_; }
    Rational& coord(int k) { return c_[k]; }
    const Rational& coord(int k) const { return c_[k]; }

    bool is_zero() const;
    bool is_rational() const;         // c1..c7 all zero
    bool in_iw_subfield() const;      // lies in Q + Qi + Qw
    Rational rational_part() const;   // requires is_rational()
    // (a, b, c) with value a + b*i + c*w; requires in_iw_subfield().
    std::array<Rational, 3> iw_parts() const;

    CycNumber operator-() const;
    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber operator*(const Rational& s) const;
    CycNumber& operator*=(const Rational& s);
    bool operator==(const CycNumber& o) const { return c_ == o.c_; }
    bool operator!=(const CycNumber& o) const { return c_ != o.c_; }

    // Multiplicative inverse via an exact 8x8 solve; throws on zero.
    CycNumber inverse() const;

    // "0", "-1/24", "3 + 1/8*i", "1/18 + 1/18*w", or a power-basis fallback.
    std::string str() const;

    std::array<Rational, 8> c_{};
};

inline CycNumber operator*(const Rational& s, const CycNumber& x) { return x * s; }

// sum_{j=0}^{M-1} zeta_M^{j*(n-m)}; equals M when n == m (mod M), else 0.
CycNumber roots_of_unity_filter_sum(long long M, long long n, long long m);

std::string rational_str(const Rational& r);

}  // namespace eistheta
