#include "eistheta/qseries.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace eistheta {

namespace {

bool valid_delta(long long d) {
    return d >= 1 && 24 % d == 0;
}

}  // namespace

long long sigma1(long long n) {
    if (n < 1) throw std::invalid_argument("sigma1: n must be positive");
    long long s = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += d;
        if (d != n / d) s += n / d;
    }
    return s;
}

std::vector<long long> sigma1_table(long long n_max) {
    if (n_max < 0) throw std::invalid_argument("sigma1_table: negative bound");
    std::vector<long long> t(n_max + 1, 0);
    for (long long d = 1; d <= n_max; ++d)
        for (long long m = d; m <= n_max; m += d) t[m] += d;
    return t;
}

FourierSeries::FourierSeries(long long delta, const Rational& trunc)
    : delta_(delta), trunc_(trunc) {
    if (!valid_delta(delta)) throw std::invalid_argument("FourierSeries: delta must divide 24");
    if (trunc < 0) throw std::invalid_argument("FourierSeries: negative truncation");
}

Rational FourierSeries::low() const {
    if (terms_.empty()) return trunc_;
    return frac(terms_.begin()->first, delta_);
}

CycNumber FourierSeries::coeff(const Rational& e) const {
    if (e >= trunc_) throw std::out_of_range("coeff: exponent at or beyond truncation");
    if (e < 0) return CycNumber();
    Rational scaled = e * frac(delta_);
    if (scaled.get_den() != 1) return CycNumber();  // off-lattice exponents carry 0
    long long key = scaled.get_num().get_si();
    auto it = terms_.find(key);
    return it == terms_.end() ? CycNumber() : it->second;
}

void FourierSeries::set_coeff(const Rational& e, const CycNumber& v) {
    if (e < 0 || e >= trunc_) throw std::out_of_range("set_coeff: exponent outside [0, trunc)");
    Rational scaled = e * frac(delta_);
    if (scaled.get_den() != 1)
        throw std::invalid_argument("set_coeff: exponent not on the delta-lattice");
    long long key = scaled.get_num().get_si();
    if (v.is_zero())
        terms_.erase(key);
    else
        terms_[key] = v;
}

void FourierSeries::normalize() {
    if (terms_.empty()) {
        delta_ = 1;
        return;
    }
    long long g = delta_;
    for (const auto& [k, v] : terms_) g = std::gcd(g, k);
    if (g <= 1) return;
    std::map<long long, CycNumber> rescaled;
    for (auto& [k, v] : terms_) rescaled.emplace(k / g, std::move(v));
    terms_ = std::move(rescaled);
    delta_ /= g;
}

FourierSeries FourierSeries::operator+(const FourierSeries& o) const {
    long long L = std::lcm(delta_, o.delta_);
    FourierSeries out(L, std::min(trunc_, o.trunc_));
    Rational bound = out.trunc_ * frac(L);
    auto accumulate = [&](const FourierSeries& s) {
        long long stride = L / s.delta_;
        for (const auto& [k, v] : s.terms_) {
            long long key = k * stride;
            if (frac(key) >= bound) break;
            auto& slot = out.terms_[key];
            slot += v;
            if (slot.is_zero()) out.terms_.erase(key);
        }
    };
    accumulate(*this);
    accumulate(o);
    out.normalize();
    return out;
}

FourierSeries FourierSeries::operator-(const FourierSeries& o) const {
    return *this + o.scaled(CycNumber(-1LL));
}

FourierSeries FourierSeries::operator*(const FourierSeries& o) const {
    long long L = std::lcm(delta_, o.delta_);
    // Unknown tails start at trunc; the product is exact strictly below
    // min(trunc_f + low_g, trunc_g + low_f).
    Rational T = std::min(trunc_ + o.low(), o.trunc_ + low());
    FourierSeries out(L, T);
    Rational bound = T * frac(L);
    long long sf = L / delta_, sg = L / o.delta_;
    for (const auto& [kf, vf] : terms_) {
        if (frac(kf * sf) >= bound) break;
        for (const auto& [kg, vg] : o.terms_) {
            long long key = kf * sf + kg * sg;
            if (frac(key) >= bound) break;
            auto& slot = out.terms_[key];
            slot += vf * vg;
            if (slot.is_zero()) out.terms_.erase(key);
        }
    }
    out.normalize();
    return out;
}

FourierSeries FourierSeries::scaled(const CycNumber& s) const {
    FourierSeries out(delta_, trunc_);
    if (s.is_zero()) {
        out.normalize();
        return out;
    }
    for (const auto& [k, v] : terms_) {
        CycNumber c = v * s;
        if (!c.is_zero()) out.terms_.emplace(k, std::move(c));
    }
    out.normalize();
    return out;
}

FourierSeries FourierSeries::sieve(long long M, long long m) const {
    if (M < 1) throw std::invalid_argument("sieve: modulus must be positive");
    for (const auto& [k, v] : terms_)
        if (k % delta_ != 0)
            throw std::domain_error("sieve: series has non-integral exponents");
    FourierSeries out(delta_, trunc_);
    long long r = ((m % M) + M) % M;
    for (const auto& [k, v] : terms_)
        if ((k / delta_) % M == r) out.terms_.emplace(k, v);
    out.normalize();
    return out;
}

FourierSeries FourierSeries::v_operator(const Rational& d) const {
    if (d <= 0) throw std::invalid_argument("v_operator: d must be positive");
    // New exponent of key n is d*n/delta; all of them must stay in (1/24)Z.
    std::vector<std::pair<Rational, const CycNumber*>> image;
    image.reserve(terms_.size());
    long long L = 1;
    for (const auto& [k, v] : terms_) {
        Rational e = d * frac(k, delta_);
        if (!e.get_den().fits_slong_p())
            throw std::domain_error("v_operator: exponent leaves the (1/24)Z lattice");
        long long den = e.get_den().get_si();
        if (!valid_delta(den))
            throw std::domain_error("v_operator: exponent leaves the (1/24)Z lattice");
        L = std::lcm(L, den);
        image.emplace_back(e, &v);
    }
    FourierSeries out(L, trunc_ * d);
    for (auto& [e, v] : image) {
        Rational scaled = e * frac(L);
        out.terms_.emplace(scaled.get_num().get_si(), *v);
    }
    out.normalize();
    return out;
}

FourierSeries FourierSeries::shift_character(long long j, long long M) const {
    if (M < 1) throw std::invalid_argument("shift_character: modulus must be positive");
    j = ((j % M) + M) % M;
    FourierSeries out(delta_, trunc_);
    for (const auto& [k, v] : terms_) {
        // coeff(q^e) picks up zeta_M^(j*e) = zeta_24^(24*j*e/M); e = k/delta.
        long long num = 24 * j * k;
        long long den = M * delta_;
        if (num % den != 0)
            throw std::domain_error("shift_character: zeta_M^(j*e) is not a 24th root of unity");
        CycNumber c = v * CycNumber::zeta_power(24, num / den);
        if (!c.is_zero()) out.terms_.emplace(k, std::move(c));
    }
    out.normalize();
    return out;
}

FourierSeries FourierSeries::truncate_to(const Rational& t) const {
    if (t > trunc_) throw std::out_of_range("truncate_to: window exceeds truncation");
    if (t < 0) throw std::invalid_argument("truncate_to: negative window");
    FourierSeries out(delta_, t);
    Rational bound = t * frac(delta_);
    for (const auto& [k, v] : terms_) {
        if (frac(k) >= bound) break;
        out.terms_.emplace(k, v);
    }
    out.normalize();
    return out;
}

FourierSeries e2_holomorphic(const Rational& trunc) {
    FourierSeries out(1, trunc);
    if (trunc > 0) out.set_coeff(0, CycNumber(1LL));
    if (trunc <= 1) return out;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), trunc.get_num_mpz_t(), trunc.get_den_mpz_t());
    long long n_max = c.get_si() - 1;  // largest integer strictly below trunc
    std::vector<long long> sig = sigma1_table(n_max);
    for (long long n = 1; n <= n_max; ++n)
        out.set_coeff(frac(n), CycNumber(frac(-24 * sig[n])));
    return out;
}

FourierSeries eta_product(long long a, long long e, const Rational& trunc) {
    if (a < 1 || e < 1) throw std::invalid_argument("eta_product: need a >= 1 and e >= 1");
    Rational prefix = frac(a * e, 24);
    long long delta = prefix.get_den().get_si();
    FourierSeries out(delta, trunc);
    if (trunc <= prefix) return out;
    Rational window = trunc - prefix;  // integer-exponent budget of the product part
    std::map<long long, mpz_class> poly;
    poly[0] = 1;
    for (long long n = 1; frac(a * n) < window; ++n) {
        for (long long rep = 0; rep < e; ++rep) {
            std::vector<long long> keys;
            keys.reserve(poly.size());
            for (const auto& [k, c] : poly) keys.push_back(k);
            for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
                long long kk = *it + a * n;
                if (frac(kk) >= window) continue;
                poly[kk] -= poly[*it];
                if (poly[kk] == 0) poly.erase(kk);
            }
        }
    }
    for (const auto& [k, c] : poly)
        if (c != 0) out.set_coeff(prefix + frac(k), CycNumber(Rational(c)));
    return out;
}

FourierSeries jacobi_theta(int kind, const Rational& trunc) {
    if (kind == 2) {
        FourierSeries out(8, trunc);
        for (long long n = 0;; ++n) {
            Rational e = frac((2 * n + 1) * (2 * n + 1), 8);
            if (e >= trunc) break;
            out.set_coeff(e, CycNumber(2LL));
        }
        return out;
    }
    if (kind == 3) {
        FourierSeries out(2, trunc);
        if (trunc > 0) out.set_coeff(0, CycNumber(1LL));
        for (long long n = 1;; ++n) {
            Rational e = frac(n * n, 2);
            if (e >= trunc) break;
            out.set_coeff(e, CycNumber(2LL));
        }
        return out;
    }
    throw std::invalid_argument("jacobi_theta: kind must be 2 or 3");
}

std::optional<Rational> first_mismatch(const FourierSeries& f, const FourierSeries& g,
                                       const Rational& T) {
    if (T > f.trunc() || T > g.trunc())
        throw std::out_of_range("first_mismatch: window exceeds a truncation");
    std::set<Rational> exps;
    for (const auto& [k, v] : f.terms()) {
        Rational e = frac(k, f.delta());
        if (e < T) exps.insert(e);
    }
    for (const auto& [k, v] : g.terms()) {
        Rational e = frac(k, g.delta());
        if (e < T) exps.insert(e);
    }
    for (const Rational& e : exps)
        if (f.coeff(e) != g.coeff(e)) return e;
    return std::nullopt;
}

bool equal_prefix(const FourierSeries& f, const FourierSeries& g, const Rational& T) {
    return !first_mismatch(f, g, T).has_value();
}

std::vector<long long> eta6_quartic_coeffs(long long n_max) {
    if (n_max < 0) throw std::invalid_argument("eta6_quartic_coeffs: negative bound");
    // q * prod (1 - q^(6n))^4; integer coefficients, small, so plain int64.
    std::vector<long long> poly(std::max<long long>(n_max, 1), 0);
    poly[0] = 1;
    long long window = n_max;  // poly degree budget: a(n) = poly[n-1]
    for (long long n = 1; 6 * n < window; ++n)
        for (int rep = 0; rep < 4; ++rep)
            for (long long k = window - 1 - 6 * n; k >= 0; --k)
                if (poly[k]) poly[k + 6 * n] -= poly[k];
    std::vector<long long> a(n_max + 1, 0);
    for (long long n = 1; n <= n_max; ++n) a[n] = poly[n - 1];
    return a;
}

}  // namespace eistheta
