#include "eistheta/quadform.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eistheta {

namespace {

// Leading-principal-minor test on A - shift*I, exact in rationals.
// Sylvester: positive definite iff every leading principal minor > 0.
bool positive_definite_shifted(const Gram& a, const Rational& shift) {
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                m[i][j] = frac(a[i][j]);
                if (i == j) m[i][j] -= shift;
            }
        // Fraction-free enough at 4x4: plain Gaussian elimination with the
        // determinant accumulated from pivots.
        Rational det = 1;
        for (int c = 0; c < k; ++c) {
            int piv = -1;
            for (int r = c; r < k; ++r)
                if (m[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return false;  // singular minor
            if (piv != c) {
                std::swap(m[piv], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (int r = c + 1; r < k; ++r) {
                Rational f = m[r][c] / m[c][c];
                for (int cc = c; cc < k; ++cc) m[r][cc] -= f * m[c][cc];
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

// Smallest-eigenvalue lower bound by bisection with the exact test above.
Rational eigen_lower_bound(const Gram& a) {
    if (!positive_definite_shifted(a, Rational(0)))
        throw std::invalid_argument("gram matrix is not positive definite");
    Rational lo = 0;
    Rational hi = frac(a[0][0]);
    for (int i = 1; i < 4; ++i)
        if (frac(a[i][i]) < hi) hi = frac(a[i][i]);
    for (int iter = 0; iter < 200 && !(lo > 0); ++iter) {
        Rational mid = (lo + hi) / 2;
        if (positive_definite_shifted(a, mid))
            lo = mid;
        else
            hi = mid;
    }
    if (!(lo > 0)) throw std::logic_error("eigenvalue bisection failed to separate from zero");
    return lo;
}

// Smallest coset member >= from for the class r (mod s).
long long coset_start(long long residue, long long step, long long from) {
    long long r = ((residue % step) + step) % step;
    long long off = ((r - from) % step + step) % step;
    return from + off;
}

}  // namespace

CongruentForm::CongruentForm(const Gram& gram, const std::array<long long, 4>& residues,
                             const std::array<long long, 4>& moduli)
    : gram_(gram), residues_(residues), moduli_(moduli) {
    for (int i = 0; i < 4; ++i) {
        if (moduli_[i] < 1) throw std::invalid_argument("form modulus must be positive");
        if (gram_[i][i] % 2 != 0)
            throw std::invalid_argument("gram diagonal must be even");
        for (int j = 0; j < 4; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("gram matrix must be symmetric");
    }
    eigen_lower_ = eigen_lower_bound(gram_);
}

long long CongruentForm::value(const std::array<long long, 4>& x) const {
    long long twice = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) twice += gram_[i][j] * x[i] * x[j];
    return twice / 2;
}

long long CongruentForm::coordinate_bound(long long trunc) const {
    if (trunc <= 0) return 0;
    // Q(x) >= (1/2) * eigen_lower * x_i^2, so Q(x) < T forces
    // x_i^2 <= floor(2T / eigen_lower).
    mpz_class num = eigen_lower_.get_num();
    mpz_class den = eigen_lower_.get_den();
    mpz_class cap = (2 * mpz_class(static_cast<long>(trunc)) * den) / num;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), cap.get_mpz_t());
    if (!root.fits_slong_p()) throw std::overflow_error("coordinate bound overflow");
    return root.get_si();
}

CongruentForm four_squares_form(long long s, long long M) {
    Gram g{{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}};
    return CongruentForm(g, {s, s, s, s}, {M, M, M, M});
}

FourierSeries theta_series(const CongruentForm& form, long long trunc) {
    if (trunc < 1) throw std::invalid_argument("theta_series needs trunc >= 1");
    const Gram& a = form.gram();
    const auto& res = form.residues();
    const auto& mod = form.moduli();
    long long b = form.coordinate_bound(trunc);
    std::vector<long long> counts(static_cast<size_t>(trunc), 0);

    for (long long x1 = coset_start(res[0], mod[0], -b); x1 <= b; x1 += mod[0]) {
        long long t1 = a[0][0] / 2 * x1 * x1;
        for (long long x2 = coset_start(res[1], mod[1], -b); x2 <= b; x2 += mod[1]) {
            long long t2 = t1 + a[1][1] / 2 * x2 * x2 + a[0][1] * x1 * x2;
            for (long long x3 = coset_start(res[2], mod[2], -b); x3 <= b; x3 += mod[2]) {
                long long t3 = t2 + a[2][2] / 2 * x3 * x3 + (a[0][2] * x1 + a[1][2] * x2) * x3;
                long long l4 = a[0][3] * x1 + a[1][3] * x2 + a[2][3] * x3;
                for (long long x4 = coset_start(res[3], mod[3], -b); x4 <= b; x4 += mod[3]) {
                    long long q = t3 + a[3][3] / 2 * x4 * x4 + l4 * x4;
                    if (q >= 0 && q < trunc) ++counts[static_cast<size_t>(q)];
                }
            }
        }
    }

    FourierSeries out(1, frac(trunc));
    for (long long n = 0; n < trunc; ++n)
        if (counts[static_cast<size_t>(n)] != 0)
            out.set_coeff(frac(n), CycNumber(frac(counts[static_cast<size_t>(n)])));
    return out;
}

long long representation_count(const CongruentForm& form, long long n) {
    if (n < 0) throw std::invalid_argument("representation_count needs n >= 0");
    const Gram& a = form.gram();
    const auto& res = form.residues();
    const auto& mod = form.moduli();
    long long b = form.coordinate_bound(n + 1);
    long long h = a[3][3] / 2;  // positive: gram is positive definite
    long long r4 = ((res[3] % mod[3]) + mod[3]) % mod[3];
    long long count = 0;

    for (long long x1 = coset_start(res[0], mod[0], -b); x1 <= b; x1 += mod[0]) {
        long long t1 = a[0][0] / 2 * x1 * x1;
        for (long long x2 = coset_start(res[1], mod[1], -b); x2 <= b; x2 += mod[1]) {
            long long t2 = t1 + a[1][1] / 2 * x2 * x2 + a[0][1] * x1 * x2;
            for (long long x3 = coset_start(res[2], mod[2], -b); x3 <= b; x3 += mod[2]) {
                long long t3 = t2 + a[2][2] / 2 * x3 * x3 + (a[0][2] * x1 + a[1][2] * x2) * x3;
                long long l = a[0][3] * x1 + a[1][3] * x2 + a[2][3] * x3;
                // h*x4^2 + l*x4 + (t3 - n) = 0, solved over the integers.
                mpz_class disc = mpz_class(static_cast<long>(l)) * static_cast<long>(l) -
                                 4 * mpz_class(static_cast<long>(h)) * static_cast<long>(t3 - n);
                if (disc < 0) continue;
                mpz_class root;
                mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
                if (root * root != disc) continue;
                long long s = root.get_si();
                for (int sign : {+1, -1}) {
                    if (s == 0 && sign < 0) break;  // double root counted once
                    long long num = -l + sign * s;
                    if (num % (2 * h) != 0) continue;
                    long long x4 = num / (2 * h);
                    if (((x4 % mod[3]) + mod[3]) % mod[3] == r4) ++count;
                }
            }
        }
    }
    return count;
}

long long eta6_coefficient(long long n) {
    static const std::vector<long long> table = eta6_quartic_coeffs(5000);
    if (n < 0) return 0;
    if (n < static_cast<long long>(table.size())) return table[static_cast<size_t>(n)];
    return eta6_quartic_coeffs(n)[static_cast<size_t>(n)];
}

namespace {

long long exact_third(long long v, const char* what) {
    if (v % 3 != 0) throw std::logic_error(std::string(what) + ": value not divisible by 3");
    return v / 3;
}

}  // namespace

long long closed_form_r(long long s, long long M, long long n) {
    if (M != 2 && M != 3 && M != 4 && M != 6)
        throw std::invalid_argument("closed_form_r covers only M in {2, 3, 4, 6}");
    if (n < 0) return 0;
    s = ((s % M) + M) % M;

    if (M == 2) {
        if (s == 0) {
            if (n == 0) return 1;
            if (n % 8 == 0) return 24 * (sigma1(n / 4) - 2 * sigma1(n / 8));
            if (n % 8 == 4) return 8 * sigma1(n / 4);
            return 0;
        }
        return n % 8 == 4 ? 16 * sigma1(n / 4) : 0;
    }

    if (M == 4) {
        if (s == 0) {
            if (n == 0) return 1;
            if (n % 32 == 0) return 24 * (sigma1(n / 16) - 2 * sigma1(n / 32));
            if (n % 32 == 16) return 8 * sigma1(n / 16);
            return 0;
        }
        if (s == 2) return n % 32 == 16 ? 16 * sigma1(n / 16) : 0;
        return n % 8 == 4 ? sigma1(n / 4) : 0;  // s = 1 and s = 3 agree
    }

    if (M == 3) {
        if (s == 0) {
            if (n == 0) return 1;
            if (n % 18 == 0) return 24 * (sigma1(n / 9) - 2 * sigma1(n / 18));
            if (n % 18 == 9) return 8 * sigma1(n / 9);
            return 0;
        }
        // s = 1 and s = 2 agree
        if (n == 0) return 0;
        if (n % 12 == 4) return sigma1(n / 2) - 2 * sigma1(n / 4);
        if (n % 12 == 10) return sigma1(n / 2);
        if (n % 6 == 1) return exact_third(sigma1(n) - eta6_coefficient(n), "r_{1,3}");
        return 0;
    }

    // M == 6
    if (s == 0) {
        if (n == 0) return 1;
        if (n % 72 == 0) return 24 * (sigma1(n / 36) - 2 * sigma1(n / 72));
        if (n % 72 == 36) return 8 * sigma1(n / 36);
        return 0;
    }
    if (s == 3) return n % 72 == 36 ? 16 * sigma1(n / 36) : 0;
    if (s == 1 || s == 5) {
        if (n % 24 != 4) return 0;
        return exact_third(2 * sigma1(n / 4) + eta6_coefficient(n / 4), "r_{1,6}");
    }
    // s = 2 or s = 4
    if (n % 48 == 4 || n % 48 == 28)
        return exact_third(sigma1(n / 4) - eta6_coefficient(n / 4), "r_{2,6}");
    if (n % 48 == 16) return exact_third(sigma1(n / 4) - 4 * sigma1(n / 16), "r_{2,6}");
    if (n % 48 == 40) return exact_third(sigma1(n / 4), "r_{2,6}");
    return 0;
}

std::optional<long long> mod4_divisibility_check(long long n_max) {
    if (n_max < 1) return std::nullopt;
    FourierSeries th = theta_series(four_squares_form(1, 3), n_max + 1);
    for (long long n = 1; n <= n_max; n += 2) {
        CycNumber c = th.coeff_int(n);
        Rational r = c.rational_part();
        if (r.get_den() != 1) throw std::logic_error("theta coefficient not integral");
        mpz_class rem = r.get_num() % 4;
        if (rem != 0) return n;
    }
    return std::nullopt;
}

}  // namespace eistheta
