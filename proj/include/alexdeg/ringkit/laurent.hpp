#pragma once

// Multivariate Laurent polynomials over Z.
//
// A polynomial is a sorted map from exponent vectors (signed, length
// num_vars) to nonzero GMP integers. The zero polynomial has no terms.
// Everything here is a value type; all operations are pure.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alexdeg::ring {

using Exponent = std::vector<std::int64_t>;

class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, mpz_class>;

  explicit LaurentPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static LaurentPolynomial constant(std::size_t num_vars, const mpz_class& c);
  static LaurentPolynomial monomial(std::size_t num_vars, Exponent e,
                                    const mpz_class& c = 1);
  // t_i
  static LaurentPolynomial variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;   // zero counts as constant
  bool is_monomial() const;   // exactly one term
  // True iff this is a unit of the Laurent ring: +-t^e.
  bool is_unit() const;

  mpz_class coefficient(const Exponent& e) const;
  // Adds c * t^e, pruning a resulting zero coefficient.
  void add_term(const Exponent& e, const mpz_class& c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

  LaurentPolynomial pow(unsigned k) const;
  // Multiply by the monomial t^shift.
  LaurentPolynomial shifted(std::span<const std::int64_t> shift) const;
  LaurentPolynomial scaled(const mpz_class& c) const;

  // Componentwise minimum / maximum exponent over all terms (zeros for the
  // zero polynomial).
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  // Greatest common divisor of the integer coefficients (0 for zero).
  mpz_class content() const;

  // Graded-lex descending rendering, e.g. "t1*t2*t3 - 1". Variable names
  // default to t1..tn.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t num_vars_;
  TermMap terms_;

  void check_compatible(const LaurentPolynomial& o) const;
};

// Exact product; throws std::invalid_argument on a variable-count mismatch.
LaurentPolynomial lp_mul(const LaurentPolynomial& p, const LaurentPolynomial& q);

// max(total exponent) - min(total exponent) over the terms. Throws
// std::domain_error on the zero polynomial.
std::int64_t degree_spread(const LaurentPolynomial& q);

// Weighted variant: the grading sends t_i to weight[i].
std::int64_t degree_spread(const LaurentPolynomial& q,
                           std::span<const std::int64_t> weight);

// Canonical representative up to units: monomial factor removed so every
// variable has minimal exponent 0, coefficient of the graded-lex leading
// monomial positive (so "t1*t2*t3 - 1", not "1 - t1*t2*t3"). Zero maps to zero.
LaurentPolynomial normalize_unit(const LaurentPolynomial& p);

// Returns q with a == b * q exactly in the Laurent ring, or nullopt.
// Throws std::domain_error when b is zero.
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& a,
                                              const LaurentPolynomial& b);

// gcd up to units, normalized with normalize_unit. gcd of all-zero input is 0.
// Throws std::invalid_argument on empty input.
LaurentPolynomial laurent_gcd(std::span<const LaurentPolynomial> ps);
LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

// True iff a and b differ by a unit +-t^e.
bool associates(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace alexdeg::ring
