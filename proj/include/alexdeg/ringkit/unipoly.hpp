#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alexdeg/ringkit/laurent.hpp"
#include "alexdeg/ringkit/matrix.hpp"
#include "alexdeg/ringkit/rational_function.hpp"

namespace alexdeg::ring {

// Laurent polynomial in one variable t over the rational-function field K
// in num_vars variables. coeffs_[k] multiplies t^(low_ + k); the first and
// last stored coefficients are nonzero unless the polynomial is zero.
class UniPoly {
 public:
  explicit UniPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  UniPoly(std::int64_t low, std::vector<RationalFunction> coeffs);

  static UniPoly constant(const RationalFunction& c);
  static UniPoly monomial(std::int64_t power, const RationalFunction& c);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Nonzero single term: a unit of K[t, t^-1].
  bool is_unit() const { return coeffs_.size() == 1; }
  std::int64_t low() const { return low_; }
  std::int64_t high() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  // high - low; 0 for units. Throws std::domain_error on zero.
  std::int64_t degree() const;
  const std::vector<RationalFunction>& coefficients() const { return coeffs_; }
  RationalFunction coefficient(std::int64_t power) const;
  const RationalFunction& lead() const { return coeffs_.back(); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly scaled(const RationalFunction& c) const;
  UniPoly shifted(std::int64_t k) const;

  // Associate with low() == 0 and lead() == 1; zero stays zero.
  UniPoly normalized() const;

  std::string to_string(const std::vector<std::string>& field_names = {}) const;

 private:
  std::size_t num_vars_;
  std::int64_t low_ = 0;
  std::vector<RationalFunction> coeffs_;

  void trim();
};

// Euclidean division in K[t, t^-1]: a = q*b + r with degree(r) < degree(b)
// or r == 0. Throws std::domain_error when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);

// Applies t_i -> u_i * t^grading[i] with u_distinguished = 1. The result
// lives over the field in the remaining num_vars - 1 variables u_i (i !=
// distinguished, in order). Requires grading[distinguished] == 1 so the map
// is a ring isomorphism onto K[t, t^-1] restricted to the image.
UniPoly grade_substitute(const LaurentPolynomial& p, std::span<const std::int64_t> grading,
                         std::size_t distinguished = 0);

using UniPolyMatrix = Matrix<UniPoly>;

struct PidDiagonalForm {
  // Nonzero invariant factors d_1 | d_2 | ..., each normalized; includes
  // unit factors, so factors.size() is the rank of the matrix.
  std::vector<UniPoly> factors;
  // rows - rank: rank of the free part of the presented module.
  std::size_t free_rank = 0;

  // Factors that are not units (the torsion part).
  std::vector<UniPoly> torsion_factors() const;
};

// Smith form over K[t, t^-1] by Euclidean elimination. The matrix is read as
// a module presentation: rows index generators, columns index relations.
PidDiagonalForm diagonalize_over_pid(const UniPolyMatrix& m);

}  // namespace alexdeg::ring
