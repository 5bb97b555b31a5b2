#include "alexdeg/foxcalc/fox.hpp"

#include <sstream>
#include <stdexcept>

namespace alexdeg::fox {

using groups::Letter;
using groups::Word;

GroupRingElement GroupRingElement::word(const Word& w, const mpz_class& c) {
  GroupRingElement e;
  e.add_term(w, c);
  return e;
}

mpz_class GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
  return r;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (w.is_identity()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << '(' << groups::word_to_string(w, names) << ')';
  }
  return os.str();
}

namespace {

void check_word(const Word& w, std::size_t num_generators) {
  for (const auto& l : w.letters())
    if (l.generator >= num_generators) throw std::out_of_range("word uses an unknown generator");
}

}  // namespace

GroupRingElement fox_derivative(const Word& w, std::size_t j, std::size_t num_generators) {
  if (j >= num_generators) throw std::out_of_range("generator index out of range");
  check_word(w, num_generators);
  GroupRingElement d;
  std::vector<Letter> prefix;
  for (const auto& l : w.letters()) {
    if (l.generator == j) {
      if (l.sign > 0) {
        d.add_term(Word(prefix), 1);
      } else {
        auto with_inverse = prefix;
        with_inverse.push_back(l);
        d.add_term(Word(with_inverse), -1);
      }
    }
    prefix.push_back(l);
  }
  return d;
}

bool check_fundamental_identity(const Word& w, std::size_t num_generators) {
  GroupRingElement lhs;
  for (std::size_t j = 0; j < num_generators; ++j) {
    auto x = GroupRingElement::word(Word::generator(j)) - GroupRingElement::one();
    lhs += fox_derivative(w, j, num_generators) * x;
  }
  return lhs == GroupRingElement::word(w) - GroupRingElement::one();
}

bool check_fundamental_identity(const Word& w) {
  std::size_t n = 0;
  for (const auto& l : w.letters()) n = std::max(n, l.generator + 1);
  return check_fundamental_identity(w, n);
}

ring::LaurentPolynomial abelianize_element(const GroupRingElement& e,
                                           const groups::AbelianizationData& ab) {
  ring::LaurentPolynomial r(ab.rank);
  for (const auto& [w, c] : e.terms()) r.add_term(ab.image(w), c);
  return r;
}

AlexanderMatrix alexander_matrix(const groups::Presentation& p,
                                 const groups::AbelianizationData& ab) {
  const std::size_t m = p.num_generators();
  const std::size_t q = p.relators.size();
  const std::size_t s = ab.rank;
  AlexanderMatrix a{ring::laurent_zero_matrix(m, q, s), s, p.generators};

  std::vector<ring::Exponent> gen_image(m, ring::Exponent(s, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < s; ++k) gen_image[i][k] = ab.quotient_map(k, i).get_si();

  // One prefix scan per relator fills a whole column.
  for (std::size_t c = 0; c < q; ++c) {
    ring::Exponent prefix(s, 0);
    for (const auto& l : p.relators[c].letters()) {
      const auto& g = gen_image.at(l.generator);
      if (l.sign > 0) {
        a.entries(l.generator, c).add_term(prefix, 1);
        for (std::size_t k = 0; k < s; ++k) prefix[k] += g[k];
      } else {
        for (std::size_t k = 0; k < s; ++k) prefix[k] -= g[k];
        a.entries(l.generator, c).add_term(prefix, -1);
      }
    }
  }
  return a;
}

bool columns_annihilate_generators(const AlexanderMatrix& a,
                                   const groups::AbelianizationData& ab) {
  const std::size_t m = a.entries.rows();
  for (std::size_t c = 0; c < a.entries.cols(); ++c) {
    ring::LaurentPolynomial sum(a.num_vars);
    for (std::size_t i = 0; i < m; ++i) {
      ring::Exponent e(a.num_vars, 0);
      for (std::size_t k = 0; k < a.num_vars; ++k) e[k] = ab.quotient_map(k, i).get_si();
      auto x = ring::LaurentPolynomial::monomial(a.num_vars, e) -
               ring::LaurentPolynomial::constant(a.num_vars, 1);
      sum += a.entries(i, c) * x;
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

}  // namespace alexdeg::fox
