#pragma once

#include <gmpxx.h>

#include <cstddef>

#include "alexdeg/ringkit/matrix.hpp"

namespace alexdeg::ring {

using IntMatrix = Matrix<mpz_class>;

struct SmithForm {
  IntMatrix diagonal;  // D
  IntMatrix left;      // U, unimodular, rows x rows
  IntMatrix right;     // V, unimodular, cols x cols
  // Number of nonzero diagonal entries.
  std::size_t rank = 0;
};

// U * M * V = D with D diagonal, d_i | d_{i+1}, d_i >= 0.
SmithForm smith_normal_form_int(const IntMatrix& m);

IntMatrix int_identity(std::size_t n);

// Determinant by fraction-free elimination; square input only.
mpz_class int_determinant(const IntMatrix& m);

}  // namespace alexdeg::ring
