#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alexdeg/ringkit/laurent.hpp"

namespace alexdeg::ring {

// Element of the fraction field of Z[u_1^{+-1}, ..., u_k^{+-1}].
//
// Stored reduced: gcd(num, den) = 1, den has minimal exponent 0 in every
// variable and a positive coefficient on its lex-least monomial. Monomial
// factors live in the numerator. Zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t num_vars = 0);
  explicit RationalFunction(LaurentPolynomial num);
  // Throws std::domain_error when den is zero.
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  static RationalFunction integer(std::size_t num_vars, const mpz_class& c);

  std::size_t num_vars() const { return num_.num_vars(); }
  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const;  // den == 1

  // Throws std::domain_error on zero.
  RationalFunction inverse() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;

  void normalize();
};

}  // namespace alexdeg::ring
