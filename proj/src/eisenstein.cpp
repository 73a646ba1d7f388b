#include "eistheta/eisenstein.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eistheta {

namespace {

void check_sieve_params(long long M, long long m) {
    if (M < 1 || 24 % M != 0)
        throw std::invalid_argument("sieve atom: modulus must divide 24");
    (void)m;
}

// M^2 * d must be a positive integer for the atom to carry a level.
long long integral_level(long long M, const Rational& d, const char* what) {
    Rational lv = frac(M * M) * d;
    if (lv <= 0 || lv.get_den() != 1 || !lv.get_num().fits_slong_p())
        throw std::domain_error(std::string(what) + ": level M^2*d is not a positive integer");
    return lv.get_num().get_si();
}

}  // namespace

EisAtom EisAtom::sieve_atom(long long M, long long m) {
    check_sieve_params(M, m);
    EisAtom a;
    a.kind = AtomKind::sieve;
    a.M = M;
    a.m = ((m % M) + M) % M;
    return a;
}

EisAtom EisAtom::sieve_v_atom(long long M, long long m, const Rational& d) {
    check_sieve_params(M, m);
    if (d <= 0) throw std::invalid_argument("sieve_v atom: d must be positive");
    EisAtom a;
    a.kind = AtomKind::sieve_v;
    a.M = M;
    a.m = ((m % M) + M) % M;
    a.d = d;
    return a;
}

EisAtom EisAtom::v_atom(const Rational& d) {
    if (d <= 0) throw std::invalid_argument("v atom: d must be positive");
    EisAtom a;
    a.kind = AtomKind::v;
    a.d = d;
    return a;
}

EisAtom EisAtom::combo_atom(long long p, const Rational& e) {
    if (!is_prime(p)) throw std::invalid_argument("combo atom: p must be prime");
    if (e <= 0) throw std::invalid_argument("combo atom: e must be positive");
    EisAtom a;
    a.kind = AtomKind::combo;
    a.p = p;
    a.d = e;
    return a;
}

long long EisAtom::level() const {
    switch (kind) {
        case AtomKind::sieve:
            return M * M;
        case AtomKind::sieve_v:
            return integral_level(M, d, "sieve_v atom");
        case AtomKind::combo:
            return integral_level(p, d, "combo atom");
        case AtomKind::v:
            break;
    }
    throw std::domain_error("a bare V(d) atom has no level of its own");
}

FourierSeries EisAtom::expansion(const Rational& trunc) const {
    switch (kind) {
        case AtomKind::sieve:
            return e2_holomorphic(trunc).sieve(M, m);
        case AtomKind::sieve_v:
            return e2_holomorphic(trunc / d).sieve(M, m).v_operator(d);
        case AtomKind::v:
            return e2_holomorphic(trunc / d).v_operator(d);
        case AtomKind::combo: {
            Rational pe = frac(p) * d;
            FourierSeries lhs = e2_holomorphic(trunc / pe).v_operator(pe).scaled(frac(p));
            FourierSeries rhs = e2_holomorphic(trunc / d).sieve(p, 0).v_operator(d);
            return lhs - rhs;
        }
    }
    throw std::logic_error("EisAtom::expansion: bad kind");
}

CycNumber EisAtom::cusp_value(const Cusp& cusp) const {
    if (cusp.is_infinity()) {
        switch (kind) {
            case AtomKind::sieve:
            case AtomKind::sieve_v:
                // The sieve keeps the constant term exactly when m == 0, and
                // V(d) never changes the constant term.
                return CycNumber(frac(m == 0 ? 1 : 0));
            case AtomKind::v:
                return CycNumber(1LL);
            case AtomKind::combo:
                return CycNumber(frac(p - 1));
        }
        throw std::logic_error("EisAtom::cusp_value: bad kind");
    }
    switch (kind) {
        case AtomKind::sieve:
            return cusp_value_S(M, m, cusp);
        case AtomKind::sieve_v:
            return cusp_value_SV(M, m, d, cusp);
        case AtomKind::v:
            return cusp_value_V(d, cusp);
        case AtomKind::combo:
            return CycNumber(frac(p)) * cusp_value_V(frac(p) * d, cusp) -
                   cusp_value_SV(p, 0, d, cusp);
    }
    throw std::logic_error("EisAtom::cusp_value: bad kind");
}

std::string EisAtom::str() const {
    switch (kind) {
        case AtomKind::sieve:
            return "S(" + std::to_string(M) + "," + std::to_string(m) + ")";
        case AtomKind::sieve_v:
            return "S(" + std::to_string(M) + "," + std::to_string(m) + ")|V(" +
                   rational_str(d) + ")";
        case AtomKind::v:
            return "V(" + rational_str(d) + ")";
        case AtomKind::combo:
            return "C(" + std::to_string(p) + "," + rational_str(d) + ")";
    }
    throw std::logic_error("EisAtom::str: bad kind");
}

std::string EisElement::word() const {
    std::string out;
    for (const auto& [c, atom] : terms) {
        if (!out.empty()) out += " + ";
        if (c == 1)
            out += atom.str();
        else
            out += "(" + rational_str(c) + ")*" + atom.str();
    }
    return out.empty() ? "0" : out;
}

FourierSeries expansion(const EisElement& e, const Rational& trunc) {
    FourierSeries acc(1, trunc);
    for (const auto& [c, atom] : e.terms) acc = acc + atom.expansion(trunc).scaled(c);
    return acc;
}

CycNumber cusp_value(const EisElement& e, const Cusp& cusp) {
    CycNumber acc;
    for (const auto& [c, atom] : e.terms) acc += CycNumber(c) * atom.cusp_value(cusp);
    return acc;
}

long long element_level(const EisElement& e) {
    if (e.terms.empty()) throw std::domain_error("element_level: empty element");
    long long lv = 1;
    for (const auto& [c, atom] : e.terms) lv = std::lcm(lv, atom.level());
    return lv;
}

const CycNumber* CuspValueTable::find(const Cusp& c) const {
    for (const auto& [cusp, v] : values)
        if (cusp == c) return &v;
    return nullptr;
}

CuspValueTable cusp_values(const EisElement& e, long long N) {
    long long lv = element_level(e);
    if (N % lv != 0)
        throw std::domain_error("cusp_values: element level " + std::to_string(lv) +
                                " does not divide " + std::to_string(N));
    CuspValueTable t;
    t.level = N;
    for (const Cusp& c : enumerate_cusps(N)) t.values.emplace_back(c, cusp_value(e, c));
    return t;
}

namespace {

EisElement one_atom(std::string label, const Rational& c, EisAtom atom) {
    EisElement e;
    e.label = std::move(label);
    e.terms.emplace_back(c, std::move(atom));
    return e;
}

// Normalization attached to the odd sieve residue m in the 2-power bases.
Rational two_power_norm(long long m) {
    switch (m) {
        case 1: return frac(-1, 24);
        case 3: return frac(-1, 96);
        case 5: return frac(-1, 48);
        case 7: return frac(-1, 192);
    }
    throw std::logic_error("two_power_norm: residue out of range");
}

std::vector<EisElement> basis_two_power(long long k) {
    long long pk = 1LL << k;
    std::vector<EisElement> out;
    auto label = [&](size_t i) { return "E" + std::to_string(pk) + "_" + std::to_string(i); };
    out.push_back(one_atom(label(1), 1, EisAtom::combo_atom(2, frac(1LL << (k - 2)))));
    for (long long l = std::min(k / 2, 3LL); l >= 1; --l) {
        std::vector<long long> ts{std::max(k - 2 * l - 1, 0LL), std::max(k - 2 * l, 0LL)};
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (long long t : ts) {
            for (long long m = 1; m < (1LL << l); m += 2) {
                EisAtom atom = t == 0
                                   ? EisAtom::sieve_atom(1LL << l, m)
                                   : EisAtom::sieve_v_atom(1LL << l, m, frac(1LL << t));
                out.push_back(one_atom(label(out.size() + 1), two_power_norm(m), atom));
            }
        }
    }
    return out;
}

std::vector<EisElement> basis_three_power(long long k) {
    long long pk = k == 2 ? 9 : 27;
    auto label = [&](size_t i) { return "E" + std::to_string(pk) + "_" + std::to_string(i); };
    std::vector<EisElement> out;
    out.push_back(one_atom(label(1), frac(1, 2), EisAtom::combo_atom(3, frac(k == 2 ? 1 : 3))));
    out.push_back(one_atom(label(2), frac(-1, 24), EisAtom::sieve_atom(3, 1)));
    out.push_back(one_atom(label(3), frac(-1, 72), EisAtom::sieve_atom(3, 2)));
    if (k == 3) {
        out.push_back(one_atom(label(4), frac(-1, 24), EisAtom::sieve_v_atom(3, 1, frac(3))));
        out.push_back(one_atom(label(5), frac(-1, 72), EisAtom::sieve_v_atom(3, 2, frac(3))));
    }
    return out;
}

}  // namespace

std::vector<EisElement> basis_gamma0_prime_power(long long p, long long k) {
    if (!is_prime(p)) throw std::invalid_argument("basis_gamma0_prime_power: p must be prime");
    if (k < 1) throw std::invalid_argument("basis_gamma0_prime_power: k must be >= 1");
    if (k == 1) {
        // (1/(p-1)) * C(p, 1/p) = 1 - (24/(p-1)) sum (p*sigma1(n) - sigma1(p*n)) q^n.
        return {one_atom("E" + std::to_string(p) + "_1", frac(1, p - 1),
                         EisAtom::combo_atom(p, frac(1, p)))};
    }
    if (p == 2 && k <= 7) return basis_two_power(k);
    if (p == 3 && k <= 3) return basis_three_power(k);
    throw NotConstructible(
        "no full basis is constructible for p^k with p >= 5 and k >= 2 "
        "(only p = 2 with k <= 7, p = 3 with k <= 3, or k = 1 are supported)");
}

std::vector<EisElement> spanning_set_gamma0(long long N) {
    const Rational c = frac(-1, 24);
    std::vector<EisElement> out;
    if (N == 36) {
        out.push_back(one_atom("B1", 1, EisAtom::combo_atom(2, frac(9))));
        out.push_back(one_atom("B2", c, EisAtom::sieve_atom(6, 1)));
        out.push_back(one_atom("B3", c, EisAtom::sieve_atom(6, 5)));
        long long i = 4;
        for (long long m : {1, 2})
            for (long long t : {1, 2, 4}) {
                EisAtom atom = t == 1 ? EisAtom::sieve_atom(3, m)
                                      : EisAtom::sieve_v_atom(3, m, frac(t));
                out.push_back(one_atom("B" + std::to_string(i++), c, atom));
            }
        for (long long t : {1, 3, 9}) {
            EisAtom atom = t == 1 ? EisAtom::sieve_atom(2, 1)
                                  : EisAtom::sieve_v_atom(2, 1, frac(t));
            out.push_back(one_atom("B" + std::to_string(i++), c, atom));
        }
        return out;
    }
    if (N == 144) {
        out.push_back(one_atom("A1", 1, EisAtom::combo_atom(2, frac(36))));
        long long i = 2;
        for (long long m : {1, 5, 7, 11})
            out.push_back(one_atom("A" + std::to_string(i++), c, EisAtom::sieve_atom(12, m)));
        for (long long m : {1, 5})
            for (long long t : {1, 2, 4}) {
                EisAtom atom = t == 1 ? EisAtom::sieve_atom(6, m)
                                      : EisAtom::sieve_v_atom(6, m, frac(t));
                out.push_back(one_atom("A" + std::to_string(i++), c, atom));
            }
        for (long long m : {1, 2})
            for (long long t : {1, 2, 4, 8, 16}) {
                EisAtom atom = t == 1 ? EisAtom::sieve_atom(3, m)
                                      : EisAtom::sieve_v_atom(3, m, frac(t));
                out.push_back(one_atom("A" + std::to_string(i++), c, atom));
            }
        for (long long t : {1, 2, 3, 4, 6, 9, 12, 18, 36}) {
            EisAtom atom = t == 1 ? EisAtom::sieve_atom(2, 1)
                                  : EisAtom::sieve_v_atom(2, 1, frac(t));
            out.push_back(one_atom("A" + std::to_string(i++), c, atom));
        }
        return out;
    }
    throw std::invalid_argument("spanning_set_gamma0: only levels 36 and 144 are provided");
}

std::vector<FourierSeries> cuspform_columns_gamma0(long long N, const Rational& trunc) {
    if (N == 16) return {};
    if (N == 36) return {eta_product(6, 4, trunc)};
    if (N == 144) {
        FourierSeries f = eta_product(6, 4, trunc);
        return {f, eta_product(6, 4, trunc / 2).v_operator(frac(2)),
                eta_product(6, 4, trunc / 4).v_operator(frac(4))};
    }
    throw std::invalid_argument("cuspform_columns_gamma0: only levels 16, 36 and 144");
}

namespace {

// Union of the integral and fractional supports of the columns below trunc.
std::set<Rational> support_union(const std::vector<FourierSeries>& cols, const Rational& trunc) {
    std::set<Rational> exps;
    for (const FourierSeries& f : cols)
        for (const auto& [k, v] : f.terms()) {
            Rational e = frac(k, f.delta());
            if (e < trunc) exps.insert(e);
        }
    return exps;
}

DecomposeReport solve_columns(const std::vector<FourierSeries>& cols, const FourierSeries& target,
                              size_t n_elements, const Rational& trunc) {
    std::set<Rational> exps = support_union(cols, trunc);
    for (const auto& [k, v] : target.terms()) {
        Rational e = frac(k, target.delta());
        if (e < trunc) exps.insert(e);
    }
    RatMatrix a;
    std::vector<Rational> b;
    for (const Rational& e : exps) {
        for (int coord = 0; coord < 8; ++coord) {
            std::vector<Rational> row;
            row.reserve(cols.size());
            for (const FourierSeries& f : cols) row.push_back(f.coeff(e).coord(coord));
            a.push_back(std::move(row));
            b.push_back(target.coeff(e).coord(coord));
        }
    }

    LinearSolution sol = solve_linear(a, b);
    DecomposeReport rep;
    rep.consistent = sol.consistent;
    rep.rank = sol.rank;
    rep.underdetermined = sol.rank < static_cast<long long>(cols.size());
    if (!sol.consistent) return rep;
    rep.coeffs.assign(sol.x.begin(), sol.x.begin() + n_elements);
    rep.cusp_coeffs.assign(sol.x.begin() + n_elements, sol.x.end());

    // The rows already cover the union of supports, so a consistent solve
    // recombines exactly; recompute anyway as a certificate.
    FourierSeries comb(1, trunc);
    for (size_t i = 0; i < cols.size(); ++i) comb = comb + cols[i].scaled(sol.x[i]);
    rep.first_mismatch = first_mismatch(comb, target, trunc);
    rep.exact = !rep.first_mismatch.has_value();
    return rep;
}

}  // namespace

RatMatrix expansion_matrix(const std::vector<EisElement>& elements, const Rational& trunc) {
    std::vector<FourierSeries> cols;
    cols.reserve(elements.size());
    for (const EisElement& e : elements) cols.push_back(expansion(e, trunc));
    std::set<Rational> exps = support_union(cols, trunc);
    RatMatrix a;
    for (const Rational& e : exps)
        for (int coord = 0; coord < 8; ++coord) {
            std::vector<Rational> row;
            row.reserve(cols.size());
            for (const FourierSeries& f : cols) row.push_back(f.coeff(e).coord(coord));
            a.push_back(std::move(row));
        }
    return a;
}

DecomposeReport decompose_by_expansion(const FourierSeries& target,
                                       const std::vector<EisElement>& elements,
                                       const std::vector<FourierSeries>& cuspforms,
                                       const Rational& trunc) {
    if (trunc > target.trunc())
        throw std::out_of_range("decompose_by_expansion: window exceeds target truncation");
    std::vector<FourierSeries> cols;
    cols.reserve(elements.size() + cuspforms.size());
    for (const EisElement& e : elements) cols.push_back(expansion(e, trunc));
    for (const FourierSeries& f : cuspforms) {
        if (trunc > f.trunc())
            throw std::out_of_range("decompose_by_expansion: window exceeds a column truncation");
        cols.push_back(f.truncate_to(trunc));
    }
    FourierSeries tgt = target.truncate_to(trunc);
    return solve_columns(cols, tgt, elements.size(), trunc);
}

DecomposeReport decompose_by_cusp_values(const CuspValueTable& target,
                                         const std::vector<EisElement>& elements) {
    long long N = target.level;
    std::vector<Cusp> cusps = enumerate_cusps(N);
    std::vector<CuspValueTable> tables;
    tables.reserve(elements.size());
    for (const EisElement& e : elements) tables.push_back(cusp_values(e, N));

    RatMatrix a;
    std::vector<Rational> b;
    for (const Cusp& c : cusps) {
        const CycNumber* tv = target.find(c);
        if (!tv)
            throw std::invalid_argument("decompose_by_cusp_values: target table misses cusp " +
                                        cusp_str(c));
        for (int coord = 0; coord < 8; ++coord) {
            std::vector<Rational> row;
            row.reserve(elements.size());
            for (const CuspValueTable& t : tables) row.push_back(t.find(c)->coord(coord));
            a.push_back(std::move(row));
            b.push_back(tv->coord(coord));
        }
    }

    LinearSolution sol = solve_linear(a, b);
    DecomposeReport rep;
    rep.consistent = sol.consistent;
    rep.rank = sol.rank;
    rep.underdetermined = sol.rank < static_cast<long long>(elements.size());
    if (!sol.consistent) return rep;
    rep.coeffs = sol.x;
    rep.exact = true;
    for (const Cusp& c : cusps) {
        CycNumber acc;
        for (size_t i = 0; i < elements.size(); ++i)
            acc += CycNumber(sol.x[i]) * *tables[i].find(c);
        if (acc != *target.find(c)) {
            rep.exact = false;
            rep.mismatch_cusp = c;
            break;
        }
    }
    return rep;
}

CuspValueTable theta16_cusp_table() {
    CuspValueTable t;
    t.level = 16;
    t.values.emplace_back(make_cusp(0, 1), CycNumber(frac(-1, 64)));
    t.values.emplace_back(make_cusp(1, 2), CycNumber(frac(-1, 16)));
    t.values.emplace_back(make_cusp(1, 4), CycNumber(frac(-1, 4)));
    t.values.emplace_back(make_cusp(3, 4), CycNumber(frac(-1, 4)));
    t.values.emplace_back(make_cusp(1, 8), CycNumber(1LL));
    t.values.emplace_back(make_cusp(1, 0), CycNumber(0LL));
    return t;
}

}  // namespace eistheta
