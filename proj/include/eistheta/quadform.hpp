#pragma once

#include "eistheta/qseries.hpp"

#include <array>
#include <optional>

namespace eistheta {

using Gram = std::array<std::array<long long, 4>, 4>;

// Quaternary form Q(x) = (1/2) x^T A x restricted to the coset
// x_i = residues[i] (mod moduli[i]). A must be symmetric positive definite
// with even diagonal, so Q is integer-valued and positive away from 0.
class CongruentForm {
  public:
    CongruentForm(const Gram& gram, const std::array<long long, 4>& residues,
                  const std::array<long long, 4>& moduli);

    const Gram& gram() const { return gram_; }
    const std::array<long long, 4>& residues() const { return residues_; }
    const std::array<long long, 4>& moduli() const { return moduli_; }

    long long value(const std::array<long long, 4>& x) const;

    // Any x with some |x_i| > coordinate_bound(T) has Q(x) >= T. The bound
    // comes from a rational lower bound on the spectrum of A, found by
    // exact bisection; no floating point is involved.
    long long coordinate_bound(long long trunc) const;

  private:
    Gram gram_;
    std::array<long long, 4> residues_;
    std::array<long long, 4> moduli_;
    Rational eigen_lower_;  // A - eigen_lower*I is still positive definite
};

// x1^2 + x2^2 + x3^2 + x4^2 with every x_i = s (mod M).
CongruentForm four_squares_form(long long s, long long M);

// Exact number of coset points with Q(x) = n. The first three coordinates
// are enumerated inside the coordinate bound; the last is solved exactly.
long long representation_count(const CongruentForm& form, long long n);

// Sum of q^Q(x) over coset points with Q(x) < trunc; trunc >= 1.
FourierSeries theta_series(const CongruentForm& form, long long trunc);

// Coefficient a(n) of eta(6 tau)^4 = sum_n a(n) q^n. Values up to n = 5000
// are served from a shared table built once; larger n recompute locally.
long long eta6_coefficient(long long n);

// Branchwise representation-count formulas for the fifteen covered cases
// (s mod M, M) with M in {2, 3, 4, 6}. Exact integers; throws
// std::invalid_argument for any other modulus.
long long closed_form_r(long long s, long long M, long long n);

// First odd n <= n_max with r_{1,3}(n) not divisible by 4, if any exists.
std::optional<long long> mod4_divisibility_check(long long n_max);

}  // namespace eistheta
