#include "eistheta/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace eistheta {

std::string rational_str(const Rational& r) {
    return r.get_str();
}

CycNumber CycNumber::zeta_power(long long M, long long j) {
    if (M < 1 || 24 % M != 0)
        throw std::invalid_argument("zeta_power: M must be a positive divisor of 24");
    long long e = ((j % M) + M) % M * (24 / M);  // exponent of z = zeta_24, in [0, 24)
    // Reduce z^e mod Phi_24: z^k = z^(k-4) - z^(k-8) for k >= 8.
    std::array<Rational, 24> p{};
    p[e] = 1;
    for (int k = 23; k >= 8; --k) {
        if (p[k] == 0) continue;
        p[k - 4] += p[k];
        p[k - 8] -= p[k];
        p[k] = 0;
    }
    CycNumber out;
    for (int k = 0; k < 8; ++k) out.c_[k] = p[k];
    return out;
}

CycNumber CycNumber::from_iw(const Rational& a, const Rational& b, const Rational& c) {
    CycNumber out;
    out.c_[0] = a - c;
    out.c_[4] = 2 * c;
    out.c_[6] = b;
    return out;
}

bool CycNumber::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (int k = 1; k < 8; ++k)
        if (c_[k] != 0) return false;
    return true;
}

bool CycNumber::in_iw_subfield() const {
    return c_[1] == 0 && c_[2] == 0 && c_[3] == 0 && c_[5] == 0 && c_[7] == 0;
}

Rational CycNumber::rational_part() const {
    if (!is_rational()) throw std::domain_error("rational_part: value is not rational");
    return c_[0];
}

std::array<Rational, 3> CycNumber::iw_parts() const {
    if (!in_iw_subfield()) throw std::domain_error("iw_parts: value is not in Q(i, w)");
    Rational c = c_[4] / 2;
    return {c_[0] + c, c_[6], c};
}

CycNumber CycNumber::operator-() const {
    CycNumber out;
    for (int k = 0; k < 8; ++k) out.c_[k] = -c_[k];
    return out;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    CycNumber out;
    for (int k = 0; k < 8; ++k) out.c_[k] = c_[k] + o.c_[k];
    return out;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    CycNumber out;
    for (int k = 0; k < 8; ++k) out.c_[k] = c_[k] - o.c_[k];
    return out;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    // Rational operands dominate in practice; skip the convolution for them.
    if (is_rational()) return o * c_[0];
    if (o.is_rational()) return *this * o.c_[0];
    std::array<Rational, 15> p{};
    for (int a = 0; a < 8; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 8; ++b) {
            if (o.c_[b] == 0) continue;
            p[a + b] += c_[a] * o.c_[b];
        }
    }
    for (int k = 14; k >= 8; --k) {
        if (p[k] == 0) continue;
        p[k - 4] += p[k];
        p[k - 8] -= p[k];
        p[k] = 0;
    }
    CycNumber out;
    for (int k = 0; k < 8; ++k) out.c_[k] = p[k];
    return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    *this = *this * o;
    return *this;
}

CycNumber CycNumber::operator*(const Rational& s) const {
    CycNumber out;
    if (s == 0) return out;
    for (int k = 0; k < 8; ++k) out.c_[k] = c_[k] * s;
    return out;
}

CycNumber& CycNumber::operator*=(const Rational& s) {
    for (int k = 0; k < 8; ++k) c_[k] *= s;
    return *this;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("inverse: division by zero");
    if (is_rational()) return CycNumber(Rational(1) / c_[0]);
    // Solve (this * x) = 1 as an 8x8 linear system over Q. Column k of the
    // matrix is this * z^k in the power basis. Plain Gaussian elimination;
    // entries stay exact rationals throughout.
    Rational m[8][9];
    for (int k = 0; k < 8; ++k) {
        CycNumber zk = zeta_power(24, k);
        CycNumber col = *this * zk;
        for (int r = 0; r < 8; ++r) m[r][k] = col.c_[r];
    }
    for (int r = 0; r < 8; ++r) m[r][8] = (r == 0) ? 1 : 0;
    for (int col = 0; col < 8; ++col) {
        int piv = -1;
        for (int r = col; r < 8; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("inverse: singular multiplication matrix");
        if (piv != col)
            for (int j = 0; j <= 8; ++j) std::swap(m[piv][j], m[col][j]);
        Rational d = m[col][col];
        for (int j = col; j <= 8; ++j) m[col][j] /= d;
        for (int r = 0; r < 8; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = col; j <= 8; ++j) m[r][j] -= f * m[col][j];
        }
    }
    CycNumber out;
    for (int r = 0; r < 8; ++r) out.c_[r] = m[r][8];
    return out;
}

std::string CycNumber::str() const {
    if (is_zero()) return "0";
    if (in_iw_subfield()) {
        auto [a, b, c] = iw_parts();
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const Rational& v, const char* unit) {
            if (v == 0) return;
            if (!first) os << (v > 0 ? " + " : " - ");
            Rational av = (!first && v < 0) ? Rational(-v) : v;
            if (unit[0] == '\0') {
                os << av.get_str();
            } else if (av == 1) {
                os << unit;
            } else if (av == -1) {
                os << "-" << unit;
            } else {
                os << av.get_str() << "*" << unit;
            }
            first = false;
        };
        emit(a, "");
        emit(b, "i");
        emit(c, "w");
        return os.str();
    }
    std::ostringstream os;
    os << "cyc(";
    for (int k = 0; k < 8; ++k) {
        if (k) os << ", ";
        os << c_[k].get_str();
    }
    os << ")";
    return os.str();
}

CycNumber roots_of_unity_filter_sum(long long M, long long n, long long m) {
    if (M < 1 || 24 % M != 0)
        throw std::invalid_argument("roots_of_unity_filter_sum: M must divide 24");
    CycNumber acc;
    for (long long j = 0; j < M; ++j) acc += CycNumber::zeta_power(M, j * (n - m));
    return acc;
}

}  // namespace eistheta
