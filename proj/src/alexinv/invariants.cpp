#include "alexdeg/alexinv/invariants.hpp"

#include <numeric>

#include "alexdeg/ringkit/laurent_matrix.hpp"

namespace alexdeg::inv {

using ring::LaurentPolynomial;

Delta0Value Delta0Value::finite(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("delta_0 cannot be negative");
  Delta0Value d;
  d.value_ = v;
  return d;
}

std::int64_t Delta0Value::value() const {
  if (!value_) throw std::logic_error("delta_0 is infinite");
  return *value_;
}

std::string Delta0Value::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

std::vector<LaurentPolynomial> elementary_ideal_gens(const fox::AlexanderMatrix& a, std::size_t i) {
  const std::size_t m = a.entries.rows();
  const std::size_t q = a.entries.cols();
  if (i >= m) return {LaurentPolynomial::constant(a.num_vars, 1)};
  if (m - i > q) return {};
  return ring::minors(a.entries, m - i);
}

LaurentPolynomial elementary_ideal_gcd(const fox::AlexanderMatrix& a, std::size_t i) {
  const std::size_t m = a.entries.rows();
  const std::size_t q = a.entries.cols();
  if (i >= m) return LaurentPolynomial::constant(a.num_vars, 1);
  if (m - i > q) return LaurentPolynomial(a.num_vars);
  LaurentPolynomial g(a.num_vars);
  ring::for_each_minor(a.entries, m - i, [&](const LaurentPolynomial& minor) {
    if (minor.is_zero()) return true;
    g = g.is_zero() ? ring::normalize_unit(minor) : ring::laurent_gcd(g, minor);
    return !g.is_unit();
  });
  return g;
}

LaurentPolynomial alexander_polynomial(const fox::AlexanderMatrix& a) {
  return elementary_ideal_gcd(a, 1);
}

LaurentPolynomial alexander_polynomial(const groups::Presentation& p) {
  return alexander_polynomial(fox::alexander_matrix(p, groups::abelianize(p)));
}

Delta0Value delta0_from_polynomial(const LaurentPolynomial& delta) {
  if (delta.is_zero()) return Delta0Value::infinite();
  return Delta0Value::finite(ring::degree_spread(delta));
}

Delta0Value delta0_via_degree(const groups::Presentation& p) {
  auto ab = groups::abelianize(p);
  if (ab.rank == 0) throw std::invalid_argument("delta_0 needs a nontrivial free abelian quotient");
  return delta0_from_polynomial(alexander_polynomial(fox::alexander_matrix(p, ab)));
}

std::size_t default_distinguished_variable(const groups::Presentation& p,
                                           const groups::AbelianizationData& ab) {
  if (!ab.meridian_basis) return 0;
  for (std::size_t j = 0; j < p.num_generators(); ++j) {
    if (!p.meridians[j]) continue;
    for (std::size_t k = 0; k < ab.rank; ++k)
      if (ab.quotient_map(k, j) != 0) return k;
  }
  return 0;
}

PidRoute delta0_via_pid_detailed(const fox::AlexanderMatrix& a, std::size_t distinguished) {
  const std::size_t s = a.num_vars;
  if (s == 0) throw std::invalid_argument("delta_0 needs a nontrivial free abelian quotient");
  if (distinguished >= s) throw std::invalid_argument("distinguished variable out of range");
  const std::vector<std::int64_t> grading(s, 1);
  ring::UniPolyMatrix graded(a.entries.rows(), a.entries.cols(), ring::UniPoly(s - 1));
  for (std::size_t i = 0; i < a.entries.rows(); ++i)
    for (std::size_t j = 0; j < a.entries.cols(); ++j)
      graded(i, j) = ring::grade_substitute(a.entries(i, j), grading, distinguished);

  PidRoute r{ring::diagonalize_over_pid(graded), Delta0Value::infinite(), distinguished};
  if (r.form.free_rank == 0)
    throw InconsistentPresentation(
        "the presented module has no free summand; not a curve complement presentation");
  if (r.form.free_rank == 1) {
    std::int64_t total = 0;
    for (const auto& f : r.form.factors) total += f.degree();
    r.delta0 = Delta0Value::finite(total);
  }
  return r;
}

Delta0Value delta0_via_pid(const groups::Presentation& p) {
  auto ab = groups::abelianize(p);
  auto a = fox::alexander_matrix(p, ab);
  return delta0_via_pid_detailed(a, default_distinguished_variable(p, ab)).delta0;
}

Delta0Value delta0_via_pid(const groups::Presentation& p, std::size_t distinguished) {
  auto ab = groups::abelianize(p);
  return delta0_via_pid_detailed(fox::alexander_matrix(p, ab), distinguished).delta0;
}

bool characteristic_codim_flag(const LaurentPolynomial& delta) {
  return !delta.is_zero() && delta.is_constant();
}

bool is_homogeneous(const LaurentPolynomial& p) {
  return !p.is_zero() && ring::degree_spread(p) == 0;
}

InvariantReport compute_invariants(const groups::Presentation& p, Route route,
                                   const std::string& provenance) {
  auto ab = groups::abelianize(p);
  if (ab.rank == 0) throw std::invalid_argument("delta_0 needs a nontrivial free abelian quotient");
  auto a = fox::alexander_matrix(p, ab);

  InvariantReport r;
  r.s = ab.rank;
  r.num_generators = p.num_generators();
  r.num_relators = p.relators.size();
  r.torsion_detected = ab.torsion_detected;
  r.meridian_basis = ab.meridian_basis;
  r.provenance = provenance;
  r.delta = alexander_polynomial(a);
  r.codim_gt_one = characteristic_codim_flag(r.delta);

  if (route != Route::Pid) r.delta0_degree = delta0_from_polynomial(r.delta);
  if (route != Route::Degree)
    r.delta0_pid = delta0_via_pid_detailed(a, default_distinguished_variable(p, ab)).delta0;
  r.delta0 = r.delta0_degree ? *r.delta0_degree : *r.delta0_pid;
  if (r.delta0_degree && r.delta0_pid) r.route_agreement = *r.delta0_degree == *r.delta0_pid;

  if (r.torsion_detected) r.notes.push_back("H_1 has torsion; the torsion-free quotient is used");
  if (!r.meridian_basis)
    r.notes.push_back("meridians do not map to a basis of H; linking grading is the coordinate sum");
  if (r.s == 1 && r.codim_gt_one) r.notes.push_back("Delta is constant, so all higher-order degrees vanish");
  if (!r.route_agreement) r.notes.push_back("degree and pid routes disagree");
  return r;
}

}  // namespace alexdeg::inv
