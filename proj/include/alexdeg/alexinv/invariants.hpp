#pragma once

// Elementary ideals, the multivariable Alexander polynomial and the
// zeroth higher-order degree delta_0, computed by two independent routes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alexdeg/foxcalc/fox.hpp"
#include "alexdeg/groups/presentation.hpp"
#include "alexdeg/ringkit/laurent.hpp"
#include "alexdeg/ringkit/unipoly.hpp"

namespace alexdeg::inv {

class Delta0Value {
 public:
  static Delta0Value finite(std::int64_t v);
  static Delta0Value infinite() { return Delta0Value(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_; }
  // Throws std::logic_error when infinite.
  std::int64_t value() const;
  std::string to_string() const;  // "8" or "inf"

  friend bool operator==(const Delta0Value&, const Delta0Value&) = default;

 private:
  std::optional<std::int64_t> value_;
};

// The presented module has no free summand, which no curve complement
// presentation can produce.
class InconsistentPresentation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generators of E_i of the m x q matrix: [1] if i >= m, [] if m - i > q,
// otherwise every (m - i)-minor.
std::vector<ring::LaurentPolynomial> elementary_ideal_gens(const fox::AlexanderMatrix& a,
                                                           std::size_t i);

// gcd of the E_i generators, normalized; 0 for the zero ideal. Stops as soon
// as the running gcd is a unit.
ring::LaurentPolynomial elementary_ideal_gcd(const fox::AlexanderMatrix& a, std::size_t i);

ring::LaurentPolynomial alexander_polynomial(const fox::AlexanderMatrix& a);
ring::LaurentPolynomial alexander_polynomial(const groups::Presentation& p);

// INFINITE when E_1 = 0, else degree_spread(Delta). Throws
// std::invalid_argument when H is trivial (s = 0).
Delta0Value delta0_via_degree(const groups::Presentation& p);
Delta0Value delta0_from_polynomial(const ring::LaurentPolynomial& delta);

struct PidRoute {
  ring::PidDiagonalForm form;
  Delta0Value delta0;
  std::size_t distinguished = 0;
};

// Variable of the first meridian generator when meridians form a basis,
// otherwise variable 0.
std::size_t default_distinguished_variable(const groups::Presentation& p,
                                           const groups::AbelianizationData& ab);

// Grades the Alexander matrix by t_i -> u_i t (u_distinguished = 1) and
// diagonalizes over K_0[t^{+-1}]. free rank >= 2 gives INFINITE, free rank 1
// gives the sum of the invariant factor degrees. Throws
// InconsistentPresentation on free rank 0 and std::invalid_argument when
// s = 0 or the distinguished variable is out of range.
PidRoute delta0_via_pid_detailed(const fox::AlexanderMatrix& a, std::size_t distinguished);
Delta0Value delta0_via_pid(const groups::Presentation& p);
Delta0Value delta0_via_pid(const groups::Presentation& p, std::size_t distinguished);

// True iff delta is a nonzero integer constant.
bool characteristic_codim_flag(const ring::LaurentPolynomial& delta);

// True iff p is nonzero and all its terms share one total degree.
bool is_homogeneous(const ring::LaurentPolynomial& p);

enum class Route { Degree, Pid, Both };

struct InvariantReport {
  ring::LaurentPolynomial delta;
  Delta0Value delta0;
  std::optional<Delta0Value> delta0_degree;
  std::optional<Delta0Value> delta0_pid;
  bool codim_gt_one = false;
  // Meaningful only when both routes ran; true otherwise.
  bool route_agreement = true;
  std::size_t s = 0;
  std::size_t num_generators = 0;
  std::size_t num_relators = 0;
  bool torsion_detected = false;
  bool meridian_basis = false;
  std::string provenance;
  std::vector<std::string> notes;
};

// Full pipeline. The pid route's InconsistentPresentation propagates.
InvariantReport compute_invariants(const groups::Presentation& p, Route route,
                                   const std::string& provenance = {});

}  // namespace alexdeg::inv
