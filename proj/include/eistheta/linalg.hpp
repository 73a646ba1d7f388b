#pragma once

#include "eistheta/cyclotomic.hpp"

#include <vector>

namespace eistheta {

using RatMatrix = std::vector<std::vector<Rational>>;

// Rank over Q, computed fraction-free: rows are scaled to integers, then
// Bareiss elimination keeps every intermediate an exact integer.
long long matrix_rank(const RatMatrix& a);

struct LinearSolution {
    bool consistent = false;
    long long rank = 0;
    std::vector<Rational> x;        // a solution with free variables pinned to 0
    std::vector<int> pivot_cols;
};

// Exact Gauss-Jordan solve of A x = b over Q.
LinearSolution solve_linear(RatMatrix a, std::vector<Rational> b);

// Basis of { x : A x = 0 }, one vector per free column of the RREF, with the
// free coordinate set to 1. Empty for injective A.
std::vector<std::vector<Rational>> nullspace_basis(RatMatrix a);

}  // namespace eistheta
