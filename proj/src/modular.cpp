#include "eistheta/modular.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eistheta {

namespace {

// x with a*x == 1 (mod k), k >= 1. Requires gcd(a, k) = 1.
long long mod_inverse(long long a, long long k) {
    if (k == 1) return 0;
    long long r0 = k, r1 = ((a % k) + k) % k;
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return ((s0 % k) + k) % k;
}

long long checked_level(long long N, const char* who) {
    if (N < 1) throw std::invalid_argument(std::string(who) + ": level must be positive");
    return N;
}

}  // namespace

Cusp make_cusp(long long h, long long k) {
    if (k == 0) {
        if (h == 0) throw std::invalid_argument("make_cusp: 0/0 is not a cusp");
        return Cusp{1, 0};
    }
    if (k < 0) {
        h = -h;
        k = -k;
    }
    long long g = std::gcd(std::abs(h), k);
    return Cusp{h / g, k / g};
}

std::string cusp_str(const Cusp& c) {
    if (c.is_infinity()) return "oo";
    if (c.k == 1 && c.h == 0) return "0";
    std::ostringstream os;
    os << c.h << "/" << c.k;
    return os.str();
}

long long euler_phi(long long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long long out = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out -= out / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) out -= out / n;
    return out;
}

long long cusp_count(long long N) {
    checked_level(N, "cusp_count");
    long long e = 0;
    for (long long d = 1; d * d <= N; ++d) {
        if (N % d) continue;
        e += euler_phi(std::gcd(d, N / d));
        if (d != N / d) e += euler_phi(std::gcd(N / d, d));
    }
    return e;
}

long long eisenstein_dim(long long N) {
    return cusp_count(checked_level(N, "eisenstein_dim")) - 1;
}

long long eisenstein_dim_prime_power(long long p, long long k) {
    if (p < 2 || k < 1) throw std::invalid_argument("eisenstein_dim_prime_power: need p >= 2, k >= 1");
    auto pow_ll = [](long long b, long long e) {
        long long r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    if (k % 2 == 0) return (p + 1) * pow_ll(p, k / 2 - 1) - 1;
    return 2 * pow_ll(p, (k - 1) / 2) - 1;
}

bool cusp_equivalent(long long N, const Cusp& c1, const Cusp& c2) {
    checked_level(N, "cusp_equivalent");
    Cusp a = make_cusp(c1.h, c1.k);
    Cusp b = make_cusp(c2.h, c2.k);
    long long s1 = a.is_infinity() ? 1 : mod_inverse(a.h, a.k);
    long long s2 = b.is_infinity() ? 1 : mod_inverse(b.h, b.k);
    long long g = std::gcd(a.k * b.k, N);  // gcd(0, N) = N covers infinity
    long long lhs = s1 * b.k - s2 * a.k;
    return ((lhs % g) + g) % g == 0;
}

std::vector<Cusp> enumerate_cusps(long long N) {
    checked_level(N, "enumerate_cusps");
    std::vector<long long> divisors;
    for (long long d = 1; d <= N; ++d)
        if (N % d == 0) divisors.push_back(d);
    std::vector<Cusp> out;
    for (long long k : divisors) {
        if (k == N) continue;  // that class is infinity, appended last
        long long classes = euler_phi(std::gcd(k, N / k));
        std::vector<Cusp> reps;
        for (long long h = 0; h < std::max<long long>(k, 1) && (long long)reps.size() < classes;
             ++h) {
            if (std::gcd(h, k) != 1) continue;
            Cusp cand{h, k};
            bool fresh = true;
            for (const Cusp& r : reps)
                if (cusp_equivalent(N, r, cand)) {
                    fresh = false;
                    break;
                }
            if (fresh) reps.push_back(cand);
        }
        if ((long long)reps.size() != classes)
            throw std::logic_error("enumerate_cusps: class sweep came up short");
        out.insert(out.end(), reps.begin(), reps.end());
    }
    out.push_back(Cusp{1, 0});
    if ((long long)out.size() != cusp_count(N))
        throw std::logic_error("enumerate_cusps: count mismatch");
    return out;
}

CycNumber cusp_value_S(long long M, long long m, const Cusp& cusp) {
    if (M < 1 || 24 % M != 0)
        throw std::invalid_argument("cusp_value_S: M must be a positive divisor of 24");
    Cusp c = make_cusp(cusp.h, cusp.k);
    m = ((m % M) + M) % M;
    if (c.is_infinity()) return CycNumber(m == 0 ? 1LL : 0LL);
    CycNumber acc;
    for (long long j = 0; j < M; ++j) {
        long long g = std::gcd(std::abs(M * c.h + j * c.k), M * c.k);
        acc += CycNumber(frac(g * g)) * CycNumber::zeta_power(M, -j * m);
    }
    return acc * frac(1, M * M * M);
}

CycNumber cusp_value_V(const Rational& d, const Cusp& cusp) {
    if (d <= 0) throw std::invalid_argument("cusp_value_V: d must be positive");
    Cusp c = make_cusp(cusp.h, cusp.k);
    if (c.is_infinity()) return CycNumber(1LL);
    long long u = d.get_num().get_si();
    long long v = d.get_den().get_si();
    long long g = std::gcd(std::abs(u * c.h), v * c.k);
    return CycNumber(frac(g * g, u * u));
}

CycNumber cusp_value_SV(long long M, long long m, const Rational& d, const Cusp& cusp) {
    if (M < 1 || 24 % M != 0)
        throw std::invalid_argument("cusp_value_SV: M must be a positive divisor of 24");
    if (d <= 0) throw std::invalid_argument("cusp_value_SV: d must be positive");
    Cusp c = make_cusp(cusp.h, cusp.k);
    if (c.is_infinity()) {
        long long r = ((m % M) + M) % M;
        return CycNumber(r == 0 ? 1LL : 0LL);
    }
    long long u = d.get_num().get_si();
    long long v = d.get_den().get_si();
    long long g = std::gcd(std::abs(u * c.h), v * c.k);
    Cusp reduced = make_cusp(u * c.h / g, v * c.k / g);
    return cusp_value_S(M, m, reduced) * frac(g * g, u * u);
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace eistheta
