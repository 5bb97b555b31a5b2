#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "alexdeg/ringkit/laurent.hpp"
#include "alexdeg/ringkit/matrix.hpp"

namespace alexdeg::ring {

using LaurentMatrix = Matrix<LaurentPolynomial>;

LaurentMatrix laurent_zero_matrix(std::size_t rows, std::size_t cols, std::size_t num_vars);

// Determinant of a square matrix. Small sizes use a division-free Laplace
// expansion over column subsets, larger ones Bareiss elimination.
LaurentPolynomial determinant(const LaurentMatrix& m);

// Calls visit on every k x k minor, row subsets outer and column subsets
// inner, both in lexicographic order. Stops early when visit returns false.
// Requires 0 < k <= min(rows, cols).
void for_each_minor(const LaurentMatrix& m, std::size_t k,
                    const std::function<bool(const LaurentPolynomial&)>& visit);

std::vector<LaurentPolynomial> minors(const LaurentMatrix& m, std::size_t k);

// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace alexdeg::ring
