#include "alexdeg/ringkit/laurent_matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace alexdeg::ring {

using LP = LaurentPolynomial;

namespace {

constexpr std::size_t kLaplaceLimit = 12;

LP laplace_determinant(const LaurentMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t nv = m(0, 0).num_vars();
  std::vector<LP> layer(std::size_t{1} << n, LP(nv));
  layer[0] = LP::constant(nv, 1);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<LP> next(layer.size(), LP(nv));
    for (std::uint32_t mask = 0; mask < layer.size(); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != r || layer[mask].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1u << c) || m(r, c).is_zero()) continue;
        // inversions added by placing column c after the used columns
        int above = std::popcount(mask >> (c + 1));
        LP term = layer[mask] * m(r, c);
        if (above % 2) next[mask | (1u << c)] -= term;
        else next[mask | (1u << c)] += term;
      }
    }
    layer = std::move(next);
  }
  return layer.back();
}

LP bareiss_determinant(LaurentMatrix a) {
  const std::size_t n = a.rows();
  const std::size_t nv = a(0, 0).num_vars();
  bool negate = false;
  LP prev = LP::constant(nv, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return LP(nv);
      a.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        LP x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = exact_divide(x, prev);
        if (!q) throw std::logic_error("Bareiss step was not exact");
        a(i, j) = std::move(*q);
      }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

}  // namespace

LaurentMatrix laurent_zero_matrix(std::size_t rows, std::size_t cols, std::size_t num_vars) {
  return LaurentMatrix(rows, cols, LP(num_vars));
}

LP determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) throw std::invalid_argument("determinant of an empty matrix needs a variable count");
  if (m.rows() <= kLaplaceLimit) return laplace_determinant(m);
  return bareiss_determinant(m);
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

void for_each_minor(const LaurentMatrix& m, std::size_t k,
                    const std::function<bool(const LP&)>& visit) {
  if (k == 0 || k > m.rows() || k > m.cols())
    throw std::out_of_range("minor size out of range");
  const auto row_sets = combinations(m.rows(), k);
  const auto col_sets = combinations(m.cols(), k);
  LaurentMatrix sub(k, k);
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      if (!visit(determinant(sub))) return;
    }
  }
}

std::vector<LP> minors(const LaurentMatrix& m, std::size_t k) {
  std::vector<LP> out;
  for_each_minor(m, k, [&](const LP& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

}  // namespace alexdeg::ring
