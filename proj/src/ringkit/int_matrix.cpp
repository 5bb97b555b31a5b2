#include "alexdeg/ringkit/int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace alexdeg::ring {

IntMatrix int_identity(std::size_t n) { return identity_matrix<mpz_class>(n, 0, 1); }

namespace {

struct Workspace {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(dst, j) += k * d(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += k * u(src, j);
  }
  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, dst) += k * d(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += k * v(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(r, j) = -d(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
  }
};

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d,
                                                                  std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  mpz_class best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      mpz_class a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form_int(const IntMatrix& m) {
  Workspace w{m, int_identity(m.rows()), int_identity(m.cols())};
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::size_t rank = 0;

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      auto pivot = smallest_entry(w.d, t);
      if (!pivot) goto done;
      w.swap_rows(t, pivot->first);
      w.swap_cols(t, pivot->second);

      const mpz_class p = w.d(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < w.d.rows(); ++i) {
        if (w.d(i, t) == 0) continue;
        mpz_class q = w.d(i, t) / p;  // truncating; remainder is smaller than |p|
        if (q != 0) w.add_row(i, t, -q);
        if (w.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < w.d.cols(); ++j) {
        if (w.d(t, j) == 0) continue;
        mpz_class q = w.d(t, j) / p;
        if (q != 0) w.add_col(j, t, -q);
        if (w.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < w.d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < w.d.cols(); ++j)
          if (!mpz_divisible_p(w.d(i, j).get_mpz_t(), p.get_mpz_t())) {
            offender = i;
            break;
          }
      if (offender) {
        w.add_row(t, *offender, 1);
        continue;
      }
      break;
    }
    if (w.d(t, t) < 0) w.negate_row(t);
    ++rank;
  }
done:
  return SmithForm{std::move(w.d), std::move(w.u), std::move(w.v), rank};
}

mpz_class int_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(x);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace alexdeg::ring
