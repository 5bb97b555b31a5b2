#include "alexdeg/ringkit/unipoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace alexdeg::ring {

using RF = RationalFunction;

UniPoly::UniPoly(std::int64_t low, std::vector<RF> coeffs)
    : num_vars_(coeffs.empty() ? 0 : coeffs.front().num_vars()),
      low_(low),
      coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(const RF& c) { return monomial(0, c); }

UniPoly UniPoly::monomial(std::int64_t power, const RF& c) {
  UniPoly p(c.num_vars());
  if (!c.is_zero()) {
    p.low_ = power;
    p.coeffs_.push_back(c);
  }
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros].is_zero()) ++lead_zeros;
  if (lead_zeros) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    low_ += static_cast<std::int64_t>(lead_zeros);
  }
  if (coeffs_.empty()) low_ = 0;
}

std::int64_t UniPoly::degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  return high() - low_;
}

RF UniPoly::coefficient(std::int64_t power) const {
  if (is_zero() || power < low_ || power > high()) return RF(num_vars_);
  return coeffs_[static_cast<std::size_t>(power - low_)];
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

UniPoly combine(const UniPoly& a, const UniPoly& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  const std::int64_t lo = std::min(a.low(), b.low());
  const std::int64_t hi = std::max(a.high(), b.high());
  std::vector<RF> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t k = lo; k <= hi; ++k) {
    RF x = a.coefficient(k);
    RF y = b.coefficient(k);
    out.push_back(subtract ? x - y : x + y);
  }
  return UniPoly(lo, std::move(out));
}

}  // namespace

UniPoly operator+(const UniPoly& a, const UniPoly& b) { return combine(a, b, false); }
UniPoly operator-(const UniPoly& a, const UniPoly& b) { return combine(a, b, true); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(std::max(a.num_vars_, b.num_vars_));
  std::vector<RF> out(a.coeffs_.size() + b.coeffs_.size() - 1, RF(a.num_vars_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.low_ + b.low_, std::move(out));
}

UniPoly UniPoly::scaled(const RF& c) const {
  if (c.is_zero()) return UniPoly(num_vars_);
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

UniPoly UniPoly::shifted(std::int64_t k) const {
  UniPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

UniPoly UniPoly::normalized() const {
  if (is_zero()) return *this;
  UniPoly r = shifted(-low_);
  if (!r.lead().is_one()) r = r.scaled(r.lead().inverse());
  return r;
}

std::string UniPoly::to_string(const std::vector<std::string>& field_names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::int64_t k = high(); k >= low_; --k) {
    const RF& c = coeffs_[static_cast<std::size_t>(k - low_)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << '(' << c.to_string(field_names) << ')';
      continue;
    }
    if (!c.is_one()) os << '(' << c.to_string(field_names) << ")*";
    os << 't';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::size_t nv = b.num_vars();
  if (a.is_zero()) return {UniPoly(nv), UniPoly(nv)};
  // Work with the polynomial parts a', b' (low exponent 0) and shift back.
  const std::int64_t la = a.low(), lb = b.low();
  UniPoly r = a.shifted(-la);
  const UniPoly bp = b.shifted(-lb);
  const RF lead_inv = bp.lead().inverse();
  std::vector<RF> q;
  const std::int64_t db = bp.high();
  if (r.high() >= db) q.assign(static_cast<std::size_t>(r.high() - db + 1), RF(nv));
  while (!r.is_zero() && r.high() >= db) {
    const std::int64_t k = r.high() - db;
    RF c = r.lead() * lead_inv;
    q[static_cast<std::size_t>(k)] = c;
    r = r - bp.scaled(c).shifted(k);
  }
  UniPoly quotient = q.empty() ? UniPoly(nv) : UniPoly(0, std::move(q));
  return {quotient.shifted(la - lb), r.shifted(la)};
}

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = std::move(y);
    y = r.normalized();
  }
  return x.normalized();
}

UniPoly grade_substitute(const LaurentPolynomial& p, std::span<const std::int64_t> grading,
                         std::size_t distinguished) {
  const std::size_t n = p.num_vars();
  if (grading.size() != n) throw std::invalid_argument("grading length must equal the variable count");
  if (n == 0) {
    // constant over the empty field of fractions
    return UniPoly::constant(RF(p));
  }
  if (distinguished >= n) throw std::out_of_range("distinguished variable out of range");
  if (grading[distinguished] != 1)
    throw std::invalid_argument("distinguished variable must have grading 1");
  const std::size_t k = n - 1;
  std::map<std::int64_t, LaurentPolynomial> by_power;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t power = 0;
    Exponent u(k);
    for (std::size_t i = 0, j = 0; i < n; ++i) {
      power += grading[i] * e[i];
      if (i != distinguished) u[j++] = e[i];
    }
    auto [it, _] = by_power.try_emplace(power, k);
    it->second.add_term(u, c);
  }
  if (by_power.empty()) return UniPoly(k);
  const std::int64_t lo = by_power.begin()->first;
  const std::int64_t hi = by_power.rbegin()->first;
  std::vector<RF> coeffs(static_cast<std::size_t>(hi - lo + 1), RF(k));
  for (auto& [power, c] : by_power) coeffs[static_cast<std::size_t>(power - lo)] = RF(std::move(c));
  return UniPoly(lo, std::move(coeffs));
}

std::vector<UniPoly> PidDiagonalForm::torsion_factors() const {
  std::vector<UniPoly> out;
  for (const auto& f : factors)
    if (!f.is_unit()) out.push_back(f);
  return out;
}

namespace {

struct PidWorkspace {
  UniPolyMatrix a;

  void add_row(std::size_t dst, std::size_t src, const UniPoly& k) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(src, j).is_zero()) a(dst, j) += k * a(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const UniPoly& k) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a(i, src).is_zero()) a(i, dst) += a(i, src) * k;
  }
  void scale_row(std::size_t r, const UniPoly& unit) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(r, j).is_zero()) a(r, j) = a(r, j) * unit;
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::int64_t best_deg = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j).is_zero()) continue;
        std::int64_t d = a(i, j).degree();
        if (!best || d < best_deg) {
          best = {i, j};
          best_deg = d;
          if (d == 0) return best;
        }
      }
    return best;
  }
};

}  // namespace

PidDiagonalForm diagonalize_over_pid(const UniPolyMatrix& m) {
  PidWorkspace w{m};
  const std::size_t steps = std::min(m.rows(), m.cols());
  PidDiagonalForm out;
  std::size_t t = 0;
  for (; t < steps; ++t) {
    bool found = true;
    while (true) {
      auto pivot = w.smallest(t);
      if (!pivot) {
        found = false;
        break;
      }
      w.a.swap_rows(t, pivot->first);
      w.a.swap_cols(t, pivot->second);
      // make the pivot monic with low exponent 0 (a unit row scaling)
      const UniPoly& p0 = w.a(t, t);
      UniPoly unit = UniPoly::monomial(-p0.low(), p0.lead().inverse());
      w.scale_row(t, unit);
      const UniPoly p = w.a(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
        if (w.a(i, t).is_zero()) continue;
        auto [q, r] = divmod(w.a(i, t), p);
        w.add_row(i, t, -q);
        if (!w.a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
        if (w.a(t, j).is_zero()) continue;
        auto [q, r] = divmod(w.a(t, j), p);
        w.add_col(j, t, -q);
        if (!w.a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offender;
      if (!p.is_unit()) {
        for (std::size_t i = t + 1; i < w.a.rows() && !offender; ++i)
          for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
            if (w.a(i, j).is_zero()) continue;
            if (!divmod(w.a(i, j), p).second.is_zero()) {
              offender = i;
              break;
            }
          }
      }
      if (offender) {
        w.add_row(t, *offender, UniPoly::constant(RF::integer(p.num_vars(), 1)));
        continue;
      }
      break;
    }
    if (!found) break;
    out.factors.push_back(w.a(t, t).normalized());
  }
  out.free_rank = m.rows() - out.factors.size();
  return out;
}

}  // namespace alexdeg::ring
