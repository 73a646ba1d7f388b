#pragma once

#include "eistheta/cyclotomic.hpp"

#include <compare>
#include <string>
#include <vector>

namespace eistheta {

// Reduced cusp h/k of the upper half plane boundary; (1, 0) denotes infinity.
struct Cusp {
    long long h = 1;
    long long k = 0;
    bool is_infinity() const { return k == 0; }
    auto operator<=>(const Cusp&) const = default;
};

// Reduce h/k: divide by gcd, force k >= 0, map every a/0 to (1, 0).
Cusp make_cusp(long long h, long long k);
std::string cusp_str(const Cusp& c);

// e(N) = sum over d | N of phi(gcd(d, N/d)).
long long cusp_count(long long N);
// e(N) - 1.
long long eisenstein_dim(long long N);
// Closed form for N = p^k, k >= 1: (p+1)p^(k/2-1) - 1 for even k,
// 2p^((k-1)/2) - 1 for odd k. Must agree with eisenstein_dim(p^k).
long long eisenstein_dim_prime_power(long long p, long long k);

// Canonical representatives, one per class: finite cusps ordered by
// denominator then numerator, infinity last. Always contains 0/1 and 1/0.
std::vector<Cusp> enumerate_cusps(long long N);

// Standard arithmetic criterion: h1/k1 ~ h2/k2 under Gamma_0(N) iff
// s1*k2 == s2*k1 (mod gcd(k1*k2, N)) where h_i*s_i == 1 (mod k_i).
bool cusp_equivalent(long long N, const Cusp& c1, const Cusp& c2);

// Value machinery for weight-2 operator atoms at cusps. At infinity every
// function returns the constant Fourier coefficient of the atom rather than
// the finite-cusp formula (the two agree for these atoms).
//
// (1/M^3) * sum_{j=0}^{M-1} gcd(M*h + j*k, M*k)^2 * zeta_M^(-j*m); M | 24.
CycNumber cusp_value_S(long long M, long long m, const Cusp& cusp);
// Value of the same sum for the V_d-rescaled atom, d = u/v > 0 rational:
// reduce u*h / (v*k) to h'/k' with g = gcd(u*h, v*k), then multiply
// cusp_value_S at h'/k' by g^2/u^2. For integer d this is the direct
// (1/(M^3 d^2)) * sum gcd(M*d*h + j*k, M*k)^2 * zeta_M^(-j*m) formula.
CycNumber cusp_value_SV(long long M, long long m, const Rational& d, const Cusp& cusp);
// gcd(u*h, v*k)^2 / u^2 for d = u/v > 0; 1 at infinity.
CycNumber cusp_value_V(const Rational& d, const Cusp& cusp);

long long euler_phi(long long n);
bool is_prime(long long n);

}  // namespace eistheta
