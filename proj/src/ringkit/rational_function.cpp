#include "alexdeg/ringkit/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace alexdeg::ring {

using LP = LaurentPolynomial;
using RF = RationalFunction;

RF::RationalFunction(std::size_t num_vars)
    : num_(num_vars), den_(LP::constant(num_vars, 1)) {}

RF::RationalFunction(LP num) : num_(std::move(num)), den_(LP::constant(num_.num_vars(), 1)) {}

RF::RationalFunction(LP num, LP den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.num_vars() != den_.num_vars())
    throw std::invalid_argument("rational function: variable count mismatch");
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RF RF::integer(std::size_t num_vars, const mpz_class& c) { return RF(LP::constant(num_vars, c)); }

bool RF::is_one() const { return den_.is_constant() && num_ == den_; }

bool RF::is_polynomial() const {
  return den_.is_constant() && den_.terms().begin()->second == 1;
}

void RF::normalize() {
  const std::size_t n = num_.num_vars();
  if (num_.is_zero()) {
    den_ = LP::constant(n, 1);
    return;
  }
  if (!is_polynomial()) {
    if (den_.is_monomial()) {
      // unit up to an integer: move the monomial into the numerator
      const auto& [e, c] = *den_.terms().begin();
      Exponent neg = e;
      for (auto& x : neg) x = -x;
      num_ = num_.shifted(neg);
      mpz_class k = c;
      mpz_class g;
      mpz_class cn = num_.content();
      mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), k.get_mpz_t());
      if (k < 0) g = -g;
      LP q = *exact_divide(num_, LP::constant(n, g));
      num_ = std::move(q);
      den_ = LP::constant(n, k / g);
    } else {
      LP g = laurent_gcd(num_, den_);
      if (!g.is_unit()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
      }
      Exponent m = den_.min_exponents();
      Exponent neg = m;
      for (auto& x : neg) x = -x;
      den_ = den_.shifted(neg);
      num_ = num_.shifted(neg);
      if (den_.terms().begin()->second < 0) {
        den_ = -den_;
        num_ = -num_;
      }
    }
  }
}

RF RF::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RF(den_, num_);
}

RF RF::operator-() const {
  RF r = *this;
  r.num_ = -r.num_;
  return r;
}

RF operator+(const RF& a, const RF& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    RF r = a;
    r.num_ += b.num_;
    if (!r.is_polynomial()) r.normalize();
    else if (r.num_.is_zero()) r.den_ = LP::constant(a.num_vars(), 1);
    return r;
  }
  return RF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RF operator-(const RF& a, const RF& b) { return a + (-b); }

RF operator*(const RF& a, const RF& b) {
  if (a.is_zero() || b.is_zero()) return RF(a.num_vars());
  if (a.is_polynomial() && b.is_polynomial()) return RF(a.num_ * b.num_);
  return RF(a.num_ * b.num_, a.den_ * b.den_);
}

RF operator/(const RF& a, const RF& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  if (a.is_zero()) return RF(a.num_vars());
  return RF(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RF::to_string(const std::vector<std::string>& names) const {
  if (is_polynomial()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace alexdeg::ring
