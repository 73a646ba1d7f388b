#include "eistheta/linalg.hpp"

#include <stdexcept>

namespace eistheta {

long long matrix_rank(const RatMatrix& a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("matrix_rank: ragged matrix");
    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (const auto& x : a[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (size_t c = 0; c < cols; ++c) {
            Rational s = a[r][c] * l;
            m[r][c] = s.get_num();
        }
    }
    long long rank = 0;
    mpz_class prev = 1;
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != static_cast<size_t>(rank)) std::swap(m[piv], m[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                mpz_class t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

LinearSolution solve_linear(RatMatrix a, std::vector<Rational> b) {
    LinearSolution out;
    size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
    size_t cols = rows ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        Rational d = a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] /= d;
        b[rank] /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++rank;
    }
    out.rank = static_cast<long long>(rank);
    for (size_t i = rank; i < rows; ++i)
        if (b[i] != 0) return out;  // inconsistent; x stays empty
    out.consistent = true;
    out.x.assign(cols, Rational(0));
    for (size_t r = 0; r < rank; ++r) out.x[out.pivot_cols[r]] = b[r];
    return out;
}

std::vector<std::vector<Rational>> nullspace_basis(RatMatrix a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("nullspace_basis: ragged matrix");

    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        Rational d = a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace eistheta
