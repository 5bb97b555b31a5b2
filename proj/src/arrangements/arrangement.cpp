#include "alexdeg/arrangements/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace alexdeg::arr {

using groups::Word;

Line::Line(mpq_class a, mpq_class b, mpq_class c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  const mpq_class lead = a_ != 0 ? a_ : b_;
  if (lead == 0) throw GeometryError("line with a = b = 0");
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

std::string Line::to_string() const {
  return a_.get_str() + " " + b_.get_str() + " " + c_.get_str();
}

IntersectionData intersect_arrangement(const std::vector<Line>& lines) {
  if (lines.empty()) throw GeometryError("arrangement has no lines");
  const std::size_t m = lines.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (lines[i] == lines[j])
        throw GeometryError("duplicate line: " + std::to_string(i + 1) + " and " + std::to_string(j + 1));

  IntersectionData d;
  d.m = m;
  d.lines = lines;

  std::map<std::pair<mpq_class, mpq_class>, std::set<std::size_t>> grouped;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Line& p = lines[i];
      const Line& q = lines[j];
      mpq_class det = p.a() * q.b() - q.a() * p.b();
      if (det == 0) continue;
      mpq_class x = (p.c() * q.b() - q.c() * p.b()) / det;
      mpq_class y = (p.a() * q.c() - q.a() * p.c()) / det;
      auto& s = grouped[{x, y}];
      s.insert(i);
      s.insert(j);
    }
  }
  for (auto& [xy, s] : grouped) d.points.push_back({xy.first, xy.second, {s.begin(), s.end()}});

  d.class_of.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < d.parallel_classes.size() && !placed; ++c) {
      if (lines[d.parallel_classes[c].front()].parallel_to(lines[i])) {
        d.parallel_classes[c].push_back(i);
        d.class_of[i] = c;
        placed = true;
      }
    }
    if (!placed) {
      d.class_of[i] = d.parallel_classes.size();
      d.parallel_classes.push_back({i});
    }
  }

  d.line_multiplicities.assign(m, {});
  for (const auto& pt : d.points)
    for (auto l : pt.lines) d.line_multiplicities[l].push_back(pt.multiplicity());
  return d;
}

std::string to_string(ArrangementClass c) {
  switch (c) {
    case ArrangementClass::AllParallel: return "AllParallel";
    case ArrangementClass::Pencil: return "Pencil";
    case ArrangementClass::NearPencil: return "NearPencil";
    case ArrangementClass::GenericPosition: return "GenericPosition";
    case ArrangementClass::HasNodalTransversalLine: return "HasNodalTransversalLine";
    case ArrangementClass::Other: return "Other";
  }
  return "Other";
}

ClassLabel classify_arrangement(const IntersectionData& d) {
  ClassLabel label;
  label.essential = d.parallel_classes.size() > 1;
  if (!label.essential) {
    label.kind = ArrangementClass::AllParallel;
    return label;
  }
  if (d.m >= 3 && d.points.size() == 1 && d.points[0].multiplicity() == d.m) {
    label.kind = ArrangementClass::Pencil;
    return label;
  }
  if (d.m >= 3 && d.parallel_classes.size() == 2) {
    for (const auto& cls : d.parallel_classes) {
      if (cls.size() == 1) {
        label.kind = ArrangementClass::NearPencil;
        label.transversal = cls.front();
        return label;
      }
    }
  }
  const bool no_parallels = d.parallel_classes.size() == d.m;
  const bool all_nodes = std::all_of(d.points.begin(), d.points.end(),
                                     [](const Point& p) { return p.multiplicity() == 2; });
  if (no_parallels && all_nodes) {
    label.kind = ArrangementClass::GenericPosition;
    return label;
  }
  // The remaining lines must stay essential once the transversal is removed.
  if (d.parallel_classes.size() >= 3) {
    for (std::size_t l = 0; l < d.m; ++l) {
      if (d.class_size(l) != 1) continue;
      const auto& ds = d.line_multiplicities[l];
      if (std::all_of(ds.begin(), ds.end(), [](std::size_t v) { return v == 2; })) {
        label.kind = ArrangementClass::HasNodalTransversalLine;
        label.transversal = l;
        return label;
      }
    }
  }
  label.kind = ArrangementClass::Other;
  return label;
}

std::optional<Verdict> vanishing_and_infinite_verdicts(const ClassLabel& label,
                                                        const IntersectionData& d) {
  const auto m = static_cast<std::int64_t>(d.m);
  switch (label.kind) {
    case ArrangementClass::AllParallel:
      if (m > 1)
        return Verdict{inv::Delta0Value::infinite(), "delta_n = infinity for all n",
                       "parallel lines: the complement group is free of rank m"};
      return Verdict{inv::Delta0Value::finite(0), "delta_n = 0 for all n",
                     "a single line: the complement group is Z"};
    case ArrangementClass::Pencil:
      return Verdict{inv::Delta0Value::finite(m * (m - 2)),
                     "delta_n = m(m-2) = " + std::to_string(m * (m - 2)) + " for all n",
                     "pencil of lines: equality case of the global bound m(m-2)"};
    case ArrangementClass::NearPencil:
      return Verdict{inv::Delta0Value::finite(m - 2),
                     "delta_n = m-2 = " + std::to_string(m - 2) + " for all n",
                     "near-pencil: m-1 parallel lines and one transversal"};
    case ArrangementClass::HasNodalTransversalLine:
      return Verdict{inv::Delta0Value::finite(0), "delta_n = 0 for all n",
                     "vanishing theorem for a line transversal to an essential arrangement (line " +
                         std::to_string(*label.transversal + 1) + ")"};
    default:
      return std::nullopt;
  }
}

BoundReport combinatorial_bounds(const IntersectionData& d) {
  if (d.parallel_classes.size() < 2) throw GeometryError("arrangement is not essential");
  BoundReport r;
  r.m = static_cast<std::int64_t>(d.m);
  r.global = r.m * (r.m - 2);
  r.best = r.global;
  for (std::size_t l = 0; l < d.m; ++l) {
    LineBound lb;
    lb.line = l;
    lb.class_size = d.class_size(l);
    for (auto v : d.line_multiplicities[l]) {
      const auto e = static_cast<std::int64_t>(v) - 1;
      lb.sum_squares += e * e;
    }
    const auto k = static_cast<std::int64_t>(lb.class_size);
    lb.bound = lb.sum_squares + (k - 1) * (r.m - k) - 1;
    r.best = std::min(*r.best, lb.bound);
    r.per_line.push_back(lb);
  }
  r.closed_form = vanishing_and_infinite_verdicts(classify_arrangement(d), d);
  return r;
}

BoundReport curve_at_infinity_bound(std::int64_t m, std::int64_t r, std::int64_t tangents) {
  if (m < 2) throw GeometryError("curve degree must be at least 2");
  if (r < 1 || r > m) throw GeometryError("need 1 <= r <= m");
  if (tangents < 0 || tangents != m - r || tangents > r)
    throw GeometryError("transversal points plus twice the tangent points must equal m");
  CurveBound c{m, r, tangents, false, std::nullopt, std::nullopt, std::nullopt};
  c.hypotheses_hold = m == 2 || r - tangents >= 1;
  if (c.hypotheses_hold) {
    c.bound = m * (m - 2);
    c.best = c.bound;
    if (r <= m - 1) {
      c.intermediate = m * m - 3 * m + r + 1;
      c.best = std::min(*c.bound, *c.intermediate);
    }
  }
  BoundReport rep;
  rep.m = m;
  rep.global = m * (m - 2);
  rep.curve = c;
  rep.best = c.best;
  return rep;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Pencil: return "pencil";
    case Family::NearPencil: return "near-pencil";
    case Family::Parallel: return "parallel";
    case Family::Generic: return "generic";
  }
  return "generic";
}

Family parse_family(std::string_view name) {
  std::string s;
  for (char ch : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "pencil") return Family::Pencil;
  if (s == "near-pencil" || s == "nearpencil" || s == "near_pencil") return Family::NearPencil;
  if (s == "parallel") return Family::Parallel;
  if (s == "generic") return Family::Generic;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

groups::Presentation family_presentation(Family f, std::size_t m) {
  const std::size_t minimum = f == Family::Pencil ? 3 : f == Family::NearPencil ? 2 : 1;
  if (m < minimum)
    throw std::invalid_argument(to_string(f) + " needs m >= " + std::to_string(minimum));
  std::vector<Word> rels;
  switch (f) {
    case Family::Pencil: {
      Word twist;
      for (std::size_t i = m; i > 0; --i) twist = twist * Word::generator(i - 1);
      for (std::size_t i = 0; i + 1 < m; ++i) rels.push_back(groups::commutator(Word::generator(i), twist));
      break;
    }
    case Family::NearPencil:
      for (std::size_t i = 0; i + 1 < m; ++i)
        rels.push_back(groups::commutator(Word::generator(i), Word::generator(m - 1)));
      break;
    case Family::Parallel:
      break;
    case Family::Generic:
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          rels.push_back(groups::commutator(Word::generator(i), Word::generator(j)));
      break;
  }
  return groups::make_presentation(m, std::move(rels));
}

namespace {

bool shear_is_generic(const IntersectionData& d, std::int64_t s) {
  for (const auto& l : d.lines)
    if (l.b() - l.a() * s == 0) return false;
  std::set<mpq_class> xs;
  for (const auto& p : d.points)
    if (!xs.insert(p.x + p.y * s).second) return false;
  return true;
}

}  // namespace

WiringResult wiring_presentation(const std::vector<Line>& lines) {
  const IntersectionData d = intersect_arrangement(lines);
  const std::size_t m = d.m;

  std::int64_t shear = 1;
  while (!shear_is_generic(d, shear)) ++shear;

  // In sweep coordinates line i is y = slope[i] x' + icpt[i].
  std::vector<mpq_class> slope(m), icpt(m);
  for (std::size_t i = 0; i < m; ++i) {
    mpq_class bb = d.lines[i].b() - d.lines[i].a() * shear;
    slope[i] = -d.lines[i].a() / bb;
    icpt[i] = d.lines[i].c() / bb;
  }

  struct Event {
    mpq_class x;
    std::vector<std::size_t> lines;
  };
  std::vector<Event> events;
  for (const auto& p : d.points) events.push_back({p.x + p.y * shear, p.lines});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.x < b.x; });

  mpq_class x0 = events.empty() ? mpq_class(0) : mpq_class(events.front().x - 1);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return slope[a] * x0 + icpt[a] < slope[b] * x0 + icpt[b];
  });

  // Wire at position k (bottom to top) carries label[k].
  std::vector<Word> label(m);
  std::vector<std::size_t> pos(m);
  for (std::size_t k = 0; k < m; ++k) {
    label[k] = Word::generator(order[k]);
    pos[order[k]] = k;
  }

  std::vector<Word> relators;
  for (const auto& ev : events) {
    std::vector<std::size_t> ps;
    for (auto l : ev.lines) ps.push_back(pos[l]);
    std::sort(ps.begin(), ps.end());
    const std::size_t p = ps.front();
    const std::size_t k = ps.size();
    if (ps.back() - p + 1 != k) throw std::logic_error("wires at a crossing are not adjacent");

    std::vector<Word> g(label.begin() + p, label.begin() + p + k);
    Word product;
    for (const auto& w : g) product = product * w;
    for (std::size_t j = 1; j < k; ++j) {
      Word cyclic;
      for (std::size_t i = j; i < k; ++i) cyclic = cyclic * g[i];
      for (std::size_t i = 0; i < j; ++i) cyclic = cyclic * g[i];
      Word rel = product * cyclic.inverse();
      if (!rel.is_identity()) relators.push_back(std::move(rel));
    }

    // The block reverses; each wire is conjugated by the wires below it.
    std::vector<std::size_t> block(order.begin() + p, order.begin() + p + k);
    Word below;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t target = p + k - 1 - j;
      label[target] = below * g[j] * below.inverse();
      order[target] = block[j];
      pos[block[j]] = target;
      below = below * g[j];
    }
  }

  return {groups::make_presentation(m, std::move(relators)), shear};
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<mpq_class> parse_rational(std::string_view tok) {
  std::string_view body = tok;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class v;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class dz{std::string(den)};
    if (dz == 0) return std::nullopt;
    v = mpq_class(mpz_class(std::string(num)), dz);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      return std::nullopt;
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class n(std::string(ip.empty() ? "0" : ip));
    n = n * scale + (fp.empty() ? mpz_class(0) : mpz_class(std::string(fp)));
    v = mpq_class(n, scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    v = mpq_class(mpz_class(std::string(body)));
  }
  v.canonicalize();
  if (negative) v = -v;
  return v;
}

std::int64_t parse_key_int(std::string_view tok, std::size_t line_no, std::string_view key) {
  auto body = tok.substr(key.size() + 1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size())
    throw groups::ParseError(line_no, "malformed integer in '" + std::string(tok) + "'");
  return v;
}

}  // namespace

ArrangementInput parse_arrangement(std::string_view text) {
  ArrangementInput in;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    std::string_view head = tokens.front();
    std::vector<std::string_view> rest(tokens.begin() + 1, tokens.end());
    if (auto colon = head.find(':'); colon != std::string_view::npos && colon + 1 < head.size()) {
      rest.insert(rest.begin(), head.substr(colon + 1));
      head = head.substr(0, colon + 1);
    }

    if (head == "line:") {
      if (rest.size() != 3) throw groups::ParseError(line_no, "a line needs exactly three coefficients");
      std::vector<mpq_class> v;
      for (auto tok : rest) {
        auto q = parse_rational(tok);
        if (!q) throw groups::ParseError(line_no, "malformed rational '" + std::string(tok) + "'");
        v.push_back(*q);
      }
      try {
        in.lines.emplace_back(v[0], v[1], v[2]);
      } catch (const GeometryError& e) {
        throw GeometryError("line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (head == "curve:") {
      if (in.curve) throw groups::ParseError(line_no, "curve declared twice");
      std::optional<std::int64_t> m, r, t;
      for (auto tok : rest) {
        auto set = [&](std::optional<std::int64_t>& slot, std::string_view key) {
          if (slot) throw groups::ParseError(line_no, "repeated key '" + std::string(key) + "'");
          slot = parse_key_int(tok, line_no, key);
        };
        if (tok.starts_with("m=")) set(m, "m");
        else if (tok.starts_with("r=")) set(r, "r");
        else if (tok.starts_with("tangents=")) set(t, "tangents");
        else throw groups::ParseError(line_no, "unknown curve field '" + std::string(tok) + "'");
      }
      if (!m || !r || !t) throw groups::ParseError(line_no, "curve needs m=, r= and tangents=");
      in.curve = CurveSpec{*m, *r, *t};
    } else {
      throw groups::ParseError(line_no, "unknown directive '" + std::string(head) + "'");
    }
  }
  return in;
}

}  // namespace alexdeg::arr
