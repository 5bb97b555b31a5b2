#pragma once

// Fox free differential calculus and the Alexander matrix.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "alexdeg/groups/presentation.hpp"
#include "alexdeg/ringkit/laurent.hpp"
#include "alexdeg/ringkit/laurent_matrix.hpp"

namespace alexdeg::fox {

// Element of the integral group ring of a free group.
class GroupRingElement {
 public:
  using TermMap = std::map<groups::Word, mpz_class>;

  GroupRingElement() = default;
  static GroupRingElement word(const groups::Word& w, const mpz_class& c = 1);
  static GroupRingElement one() { return word(groups::Word{}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const groups::Word& w) const;
  void add_term(const groups::Word& w, const mpz_class& c);

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  TermMap terms_;
};

// d w / d x_j. Throws std::out_of_range when j >= num_generators or when w
// uses a generator outside that range.
GroupRingElement fox_derivative(const groups::Word& w, std::size_t j, std::size_t num_generators);

// sum_j (dw/dx_j)(x_j - 1) == w - 1 over generators 0..num_generators-1.
bool check_fundamental_identity(const groups::Word& w, std::size_t num_generators);
bool check_fundamental_identity(const groups::Word& w);

// Image of a group-ring element in Z[H] = Z[t_1^{+-1}, ..., t_s^{+-1}].
ring::LaurentPolynomial abelianize_element(const GroupRingElement& e,
                                           const groups::AbelianizationData& ab);

struct AlexanderMatrix {
  // rows = generators, cols = relators
  ring::LaurentMatrix entries;
  std::size_t num_vars = 0;
  std::vector<std::string> generator_labels;
};

AlexanderMatrix alexander_matrix(const groups::Presentation& p,
                                 const groups::AbelianizationData& ab);

// Every column c satisfies sum_i entries(i, c) * (t^{pi(x_i)} - 1) = 0.
bool columns_annihilate_generators(const AlexanderMatrix& a,
                                   const groups::AbelianizationData& ab);

}  // namespace alexdeg::fox
