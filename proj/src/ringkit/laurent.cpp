#include "alexdeg/ringkit/laurent.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace alexdeg::ring {

using LP = LaurentPolynomial;

LP LP::constant(std::size_t num_vars, const mpz_class& c) {
  LP p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

LP LP::monomial(std::size_t num_vars, Exponent e, const mpz_class& c) {
  if (e.size() != num_vars) throw std::invalid_argument("monomial: exponent length mismatch");
  LP p(num_vars);
  p.add_term(e, c);
  return p;
}

LP LP::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw std::out_of_range("variable index out of range");
  Exponent e(num_vars, 0);
  e[i] = 1;
  return monomial(num_vars, std::move(e));
}

bool LP::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

bool LP::is_monomial() const { return terms_.size() == 1; }

bool LP::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

mpz_class LP::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LP::add_term(const Exponent& e, const mpz_class& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("add_term: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LP::check_compatible(const LP& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("Laurent polynomials have different variable counts");
}

LP LP::operator-() const {
  LP r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LP& LP::operator+=(const LP& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LP& LP::operator-=(const LP& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LP operator*(const LP& a, const LP& b) {
  a.check_compatible(b);
  LP r(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LP& LP::operator*=(const LP& o) { return *this = *this * o; }

LP LP::pow(unsigned k) const {
  LP result = constant(num_vars_, 1);
  LP base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

LP LP::shifted(std::span<const std::int64_t> shift) const {
  if (shift.size() != num_vars_) throw std::invalid_argument("shift length mismatch");
  LP r(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

LP LP::scaled(const mpz_class& c) const {
  if (c == 0) return LP(num_vars_);
  LP r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

Exponent LP::min_exponents() const {
  Exponent m(num_vars_, 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < num_vars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponent LP::max_exponents() const {
  Exponent m(num_vars_, 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < num_vars_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

mpz_class LP::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

std::int64_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

void append_monomial(std::ostringstream& os, const Exponent& e,
                     const std::vector<std::string>& names) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    if (i < names.size())
      os << names[i];
    else
      os << 't' << (i + 1);
    if (e[i] != 1) os << '^' << e[i];
  }
}

}  // namespace

std::string LP::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    auto dx = total_degree(x->first), dy = total_degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    bool is_one = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (is_one) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      append_monomial(os, e, names);
    }
  }
  return os.str();
}

LP lp_mul(const LP& p, const LP& q) { return p * q; }

std::int64_t degree_spread(const LP& q) {
  if (q.is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& [e, c] : q.terms()) {
    auto d = total_degree(e);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

std::int64_t degree_spread(const LP& q, std::span<const std::int64_t> weight) {
  if (q.is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  if (weight.size() != q.num_vars()) throw std::invalid_argument("weight length mismatch");
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& [e, c] : q.terms()) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += weight[i] * e[i];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

namespace {

// Moves p so that every variable has minimal exponent 0.
LP strip_monomial(const LP& p) {
  if (p.is_zero()) return p;
  Exponent m = p.min_exponents();
  for (auto& x : m) x = -x;
  return p.shifted(m);
}

// Coefficient of the graded-lex greatest term.
const mpz_class& leading_coefficient(const LP& p) {
  const LP::TermMap::value_type* best = nullptr;
  std::int64_t best_deg = 0;
  for (const auto& t : p.terms()) {
    std::int64_t d = total_degree(t.first);
    if (!best || d > best_deg || (d == best_deg && t.first > best->first)) {
      best = &t;
      best_deg = d;
    }
  }
  return best->second;
}

LP make_sign_positive(LP p) {
  if (!p.is_zero() && leading_coefficient(p) < 0) return -p;
  return p;
}

// Exact division of polynomials with nonnegative exponents, lex order.
std::optional<LP> poly_exact_divide(const LP& a, const LP& b) {
  const std::size_t n = a.num_vars();
  if (a.is_zero()) return LP(n);
  const Exponent max_a = a.max_exponents();
  const Exponent max_b = b.max_exponents();
  for (std::size_t i = 0; i < n; ++i)
    if (max_b[i] > max_a[i]) return std::nullopt;
  const auto& [lead_b_exp, lead_b_coef] = *b.terms().rbegin();

  LP r = a;
  LP q(n);
  Exponent shift(n);
  while (!r.is_zero()) {
    const auto& [er, cr] = *r.terms().rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = er[i] - lead_b_exp[i];
      if (shift[i] < 0 || shift[i] > max_a[i] - max_b[i]) return std::nullopt;
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), lead_b_coef.get_mpz_t())) return std::nullopt;
    mpz_class c = cr / lead_b_coef;
    q.add_term(shift, c);
    Exponent e(n);
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = eb[i] + shift[i];
      r.add_term(e, -c * cb);
    }
  }
  return q;
}

std::int64_t degree_in(const LP& p, std::size_t v) {
  std::int64_t d = -1;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

// Coefficients of p viewed as a polynomial in t_v, keyed by t_v exponent.
std::map<std::int64_t, LP> coefficients_in(const LP& p, std::size_t v) {
  std::map<std::int64_t, LP> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f[v] = 0;
    auto [it, _] = out.try_emplace(e[v], p.num_vars());
    it->second.add_term(f, c);
  }
  return out;
}

// +-1: the units of the polynomial ring Z[t].
bool is_plus_minus_one(const LP& p) { return p.is_constant() && p.is_unit(); }

LP leading_coefficient_in(const LP& p, std::size_t v) {
  return coefficients_in(p, v).rbegin()->second;
}

LP pseudo_remainder(LP a, const LP& b, std::size_t v) {
  const std::int64_t db = degree_in(b, v);
  const LP lcb = leading_coefficient_in(b, v);
  Exponent shift(a.num_vars(), 0);
  while (!a.is_zero()) {
    std::int64_t da = degree_in(a, v);
    if (da < db) break;
    LP lca = leading_coefficient_in(a, v);
    shift[v] = da - db;
    a = a * lcb - lca.shifted(shift) * b;
  }
  return a;
}

LP poly_gcd(const LP& a, const LP& b);

// gcd of the coefficients of p with respect to t_v, seeded with `seed`.
LP content_in(const LP& p, std::size_t v, LP seed) {
  for (const auto& [d, c] : coefficients_in(p, v)) {
    if (seed.is_constant() && !seed.is_zero()) {
      mpz_class g = seed.terms().begin()->second;
      mpz_class h = c.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
      seed = LP::constant(p.num_vars(), g);
    } else {
      seed = poly_gcd(seed, c);
    }
    if (is_plus_minus_one(seed)) break;
  }
  return seed;
}

LP primitive_part_in(const LP& p, std::size_t v) {
  LP c = content_in(p, v, LP(p.num_vars()));
  if (is_plus_minus_one(c)) return c.terms().begin()->second < 0 ? -p : p;
  return *poly_exact_divide(p, c);
}

// gcd in Z[t_1..t_n] (nonnegative exponents); result has a positive
// coefficient on its lex-least monomial.
LP poly_gcd(const LP& a, const LP& b) {
  const std::size_t n = a.num_vars();
  if (a.is_zero()) return make_sign_positive(b);
  if (b.is_zero()) return make_sign_positive(a);

  std::optional<std::size_t> main_var;
  for (std::size_t v = n; v-- > 0;) {
    if (degree_in(a, v) > 0 || degree_in(b, v) > 0) {
      main_var = v;
      break;
    }
  }
  if (!main_var) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.terms().begin()->second.get_mpz_t(),
            b.terms().begin()->second.get_mpz_t());
    return LP::constant(n, g);
  }
  const std::size_t v = *main_var;
  if (degree_in(a, v) == 0) return make_sign_positive(content_in(b, v, a));
  if (degree_in(b, v) == 0) return make_sign_positive(content_in(a, v, b));

  LP ca = content_in(a, v, LP(n));
  LP cb = content_in(b, v, LP(n));
  LP pa = is_plus_minus_one(ca) ? a : *poly_exact_divide(a, ca);
  LP pb = is_plus_minus_one(cb) ? b : *poly_exact_divide(b, cb);
  LP c = poly_gcd(ca, cb);

  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  while (true) {
    LP r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) {
      pa = LP::constant(n, 1);
      break;
    }
    pb = primitive_part_in(r, v);
  }
  LP g = primitive_part_in(pa, v) * c;
  return make_sign_positive(std::move(g));
}

}  // namespace

LP normalize_unit(const LP& p) { return make_sign_positive(strip_monomial(p)); }

std::optional<LP> exact_divide(const LP& a, const LP& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("exact_divide: variable count mismatch");
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LP(a.num_vars());
  Exponent ma = a.min_exponents();
  Exponent mb = b.min_exponents();
  Exponent neg_a = ma, neg_b = mb;
  for (auto& x : neg_a) x = -x;
  for (auto& x : neg_b) x = -x;
  auto q = poly_exact_divide(a.shifted(neg_a), b.shifted(neg_b));
  if (!q) return std::nullopt;
  Exponent back(a.num_vars());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = ma[i] - mb[i];
  return q->shifted(back);
}

LP laurent_gcd(const LP& a, const LP& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("laurent_gcd: variable count mismatch");
  return normalize_unit(poly_gcd(strip_monomial(a), strip_monomial(b)));
}

LP laurent_gcd(std::span<const LP> ps) {
  if (ps.empty()) throw std::invalid_argument("laurent_gcd of an empty list");
  LP g(ps.front().num_vars());
  for (const auto& p : ps) {
    g = laurent_gcd(g, p);
    if (g.is_unit()) break;
  }
  return g;
}

bool associates(const LP& a, const LP& b) {
  LP na = normalize_unit(a), nb = normalize_unit(b);
  return na == nb;
}

}  // namespace alexdeg::ring
