#include "app.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "alexdeg/foxcalc/fox.hpp"

namespace alexdeg::app {

namespace {

class ReadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReadError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json opt_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::string route_name(inv::Route r) {
  switch (r) {
    case inv::Route::Degree: return "degree";
    case inv::Route::Pid: return "pid";
    case inv::Route::Both: return "both";
  }
  return "both";
}

inv::Route parse_route(const std::string& s) {
  if (s == "degree") return inv::Route::Degree;
  if (s == "pid") return inv::Route::Pid;
  return inv::Route::Both;
}

json curve_json(const arr::CurveBound& c) {
  return {{"m", c.m},
          {"r", c.r},
          {"tangents", c.tangents},
          {"hypotheses_hold", c.hypotheses_hold},
          {"intermediate", opt_int(c.intermediate)},
          {"bound", opt_int(c.bound)},
          {"best", opt_int(c.best)}};
}

json verdict_json(const std::optional<arr::Verdict>& v) {
  if (!v) return nullptr;
  return {{"delta_n", delta0_json(v->value)}, {"statement", v->statement}, {"citation", v->citation}};
}

json bounds_json(const arr::BoundReport& b) {
  json j;
  j["m"] = b.m;
  j["global"] = opt_int(b.global);
  j["best"] = opt_int(b.best);
  json lines = json::array();
  for (const auto& lb : b.per_line)
    lines.push_back({{"line", lb.line + 1},
                     {"class_size", lb.class_size},
                     {"sum_squares", lb.sum_squares},
                     {"bound", lb.bound}});
  j["per_line"] = lines;
  if (b.curve) j["curve"] = curve_json(*b.curve);
  return j;
}

json arrangement_json(const arr::IntersectionData& d) {
  json lines = json::array();
  for (const auto& l : d.lines) lines.push_back(l.to_string());
  json points = json::array();
  for (const auto& p : d.points) {
    json idx = json::array();
    for (auto l : p.lines) idx.push_back(l + 1);
    points.push_back({{"x", p.x.get_str()}, {"y", p.y.get_str()}, {"lines", idx}});
  }
  json classes = json::array();
  for (const auto& c : d.parallel_classes) {
    json idx = json::array();
    for (auto l : c) idx.push_back(l + 1);
    classes.push_back(idx);
  }
  return {{"m", d.m}, {"lines", lines}, {"points", points}, {"parallel_classes", classes}};
}

json classification_json(const arr::ClassLabel& c) {
  return {{"label", arr::to_string(c.kind)},
          {"essential", c.essential},
          {"transversal", c.transversal ? json(*c.transversal + 1) : json(nullptr)}};
}

// Runs the invariant pipeline, turning recoverable failures into warnings.
std::optional<inv::InvariantReport> safe_invariants(const groups::Presentation& p, inv::Route route,
                                                    const std::string& provenance, json& warnings) {
  try {
    return inv::compute_invariants(p, route, provenance);
  } catch (const inv::InconsistentPresentation& e) {
    warnings.push_back(std::string("inconsistent presentation: ") + e.what());
    if (route == inv::Route::Pid) return std::nullopt;
    return inv::compute_invariants(p, inv::Route::Degree, provenance);
  } catch (const std::invalid_argument& e) {
    warnings.push_back(std::string("invariants unavailable: ") + e.what());
    return std::nullopt;
  }
}

json invariants_json(const std::optional<inv::InvariantReport>& r) {
  if (!r) return nullptr;
  json notes = json::array();
  for (const auto& n : r->notes) notes.push_back(n);
  return {{"alexander_polynomial", r->delta.to_string()},
          {"delta0", delta0_json(r->delta0)},
          {"delta0_degree", r->delta0_degree ? delta0_json(*r->delta0_degree) : json(nullptr)},
          {"delta0_pid", r->delta0_pid ? delta0_json(*r->delta0_pid) : json(nullptr)},
          {"route_agreement", r->route_agreement},
          {"codim_gt_one", r->codim_gt_one},
          {"s", r->s},
          {"generators", r->num_generators},
          {"relators", r->num_relators},
          {"torsion_detected", r->torsion_detected},
          {"meridian_basis", r->meridian_basis},
          {"provenance", r->provenance},
          {"notes", notes}};
}

groups::Presentation relabel(const groups::Presentation& p, const std::vector<std::size_t>& perm) {
  std::vector<groups::Word> rels;
  for (const auto& r : p.relators) {
    std::vector<groups::Letter> ls;
    for (const auto& l : r.letters()) ls.push_back({perm.at(l.generator), l.sign});
    rels.emplace_back(std::move(ls));
  }
  return groups::make_presentation(p.num_generators(), std::move(rels));
}

// Family presentation whose generator i is the meridian of line i.
std::optional<groups::Presentation> family_for(const arr::ClassLabel& label, std::size_t m) {
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  switch (label.kind) {
    case arr::ArrangementClass::AllParallel: return arr::family_presentation(arr::Family::Parallel, m);
    case arr::ArrangementClass::Pencil: return arr::family_presentation(arr::Family::Pencil, m);
    case arr::ArrangementClass::GenericPosition: return arr::family_presentation(arr::Family::Generic, m);
    case arr::ArrangementClass::NearPencil: {
      std::size_t next = 0;
      for (std::size_t i = 0; i + 1 < m; ++i) {
        if (next == *label.transversal) ++next;
        perm[i] = next++;
      }
      perm[m - 1] = *label.transversal;
      return relabel(arr::family_presentation(arr::Family::NearPencil, m), perm);
    }
    default: return std::nullopt;
  }
}

}  // namespace

json delta0_json(const inv::Delta0Value& v) {
  return v.is_finite() ? json(v.value()) : json("infinite");
}

json analyze_report(const arr::ArrangementInput& in, inv::Route route, Via via, bool& violation) {
  json r;
  json warnings = json::array();
  r["schema"] = 1;
  r["command"] = "analyze";
  r["route"] = route_name(route);
  if (in.lines.empty() && !in.curve) throw arr::GeometryError("input has neither lines nor a curve");

  if (!in.lines.empty()) {
    const auto d = arr::intersect_arrangement(in.lines);
    const auto label = arr::classify_arrangement(d);
    const auto verdict = arr::vanishing_and_infinite_verdicts(label, d);
    r["arrangement"] = arrangement_json(d);
    r["classification"] = classification_json(label);
    std::optional<arr::BoundReport> bounds;
    if (label.essential) bounds = arr::combinatorial_bounds(d);
    r["bounds"] = bounds ? bounds_json(*bounds) : json(nullptr);
    r["closed_form"] = verdict_json(verdict);

    std::optional<groups::Presentation> pres;
    json pj;
    if (via == Via::Family) {
      pres = family_for(label, d.m);
      if (pres) pj["source"] = "family";
      else warnings.push_back("no family presentation for class " + arr::to_string(label.kind) + "; using the wiring sweep");
    }
    if (!pres) {
      auto w = arr::wiring_presentation(in.lines);
      pres = w.presentation;
      pj["source"] = "wiring";
      pj["shear"] = w.shear;
    }
    pj["generators"] = pres->num_generators();
    pj["relators"] = pres->relators.size();
    pj["text"] = groups::serialize_presentation(*pres);
    r["presentation"] = pj;

    auto inv_report = safe_invariants(*pres, route, pj["source"].get<std::string>(), warnings);
    r["invariants"] = invariants_json(inv_report);
    if (inv_report) {
      if (!inv_report->route_agreement) {
        warnings.push_back("delta_0 routes disagree");
        violation = true;
      }
      if (verdict && !(verdict->value == inv_report->delta0)) {
        warnings.push_back("computed delta_0 contradicts the closed form");
        violation = true;
      }
      if (bounds && bounds->best && inv_report->delta0.is_finite() && inv_report->delta0.value() > *bounds->best) {
        warnings.push_back("computed delta_0 exceeds the combinatorial bound");
        violation = true;
      }
      if (inv_report->delta0.is_infinite() && label.essential) {
        warnings.push_back("infinite delta_0 for an essential arrangement");
        violation = true;
      }
    }
  }
  if (in.curve) r["curve"] = curve_json(*arr::curve_at_infinity_bound(in.curve->m, in.curve->r, in.curve->tangents).curve);
  r["warnings"] = warnings;
  return r;
}

json invariants_report(const groups::Presentation& p, inv::Route route, bool& violation) {
  json r;
  json warnings = json::array();
  r["schema"] = 1;
  r["command"] = "invariants";
  r["route"] = route_name(route);
  r["presentation"] = {{"generators", p.num_generators()},
                       {"relators", p.relators.size()},
                       {"text", groups::serialize_presentation(p)}};
  auto rep = safe_invariants(p, route, "presentation", warnings);
  r["invariants"] = invariants_json(rep);
  if (rep && rep->torsion_detected) warnings.push_back("H_1 has torsion; using the torsion-free quotient");
  if (rep && !rep->route_agreement) {
    warnings.push_back("delta_0 routes disagree");
    violation = true;
  }
  r["warnings"] = warnings;
  return r;
}

json bounds_report(const arr::ArrangementInput& in) {
  json r;
  r["schema"] = 1;
  r["command"] = "bounds";
  if (in.lines.empty() && !in.curve) throw arr::GeometryError("input has neither lines nor a curve");
  if (!in.lines.empty()) {
    const auto d = arr::intersect_arrangement(in.lines);
    const auto label = arr::classify_arrangement(d);
    r["classification"] = classification_json(label);
    r["bounds"] = label.essential ? bounds_json(arr::combinatorial_bounds(d)) : json(nullptr);
    r["closed_form"] = verdict_json(arr::vanishing_and_infinite_verdicts(label, d));
  }
  if (in.curve) r["curve"] = curve_json(*arr::curve_at_infinity_bound(in.curve->m, in.curve->r, in.curve->tangents).curve);
  return r;
}

// ---- selftest -------------------------------------------------------------

json SelftestResult::to_json() const {
  return {{"schema", 1}, {"passed", passed}, {"failed", failed}, {"results", lines}};
}

namespace {

json lines_json(const std::vector<std::array<long, 3>>& ls) {
  json out = json::array();
  for (const auto& l : ls) out.push_back({std::to_string(l[0]), std::to_string(l[1]), std::to_string(l[2])});
  return out;
}

std::string power_string(const ring::LaurentPolynomial& base, unsigned k) {
  return ring::normalize_unit(base.pow(k)).to_string();
}

ring::LaurentPolynomial full_product_minus_one(std::size_t m) {
  return ring::LaurentPolynomial::monomial(m, ring::Exponent(m, 1)) - ring::LaurentPolynomial::constant(m, 1);
}

ring::LaurentPolynomial variable_minus_one(std::size_t m, std::size_t i) {
  return ring::LaurentPolynomial::variable(m, i) - ring::LaurentPolynomial::constant(m, 1);
}

}  // namespace

json builtin_corpus() {
  json entries = json::array();
  auto add = [&](json e) { entries.push_back(std::move(e)); };

  for (long m = 3; m <= 6; ++m) {
    json expect = {{"delta0", m * (m - 2)},
                   {"delta", power_string(full_product_minus_one(m), static_cast<unsigned>(m - 2))},
                   {"codim_gt_one", false}};
    add({{"name", "pencil-family-" + std::to_string(m)}, {"group", "pencil"}, {"kind", "presentation"},
         {"source", {{"family", "pencil"}, {"m", m}}}, {"expect", expect}});
    std::vector<std::array<long, 3>> ls;
    for (long k = 0; k < m; ++k) ls.push_back({k, -1, 0});
    json lexpect = expect;
    lexpect["class"] = "Pencil";
    lexpect["best"] = m * (m - 2);
    add({{"name", "pencil-wiring-" + std::to_string(m)}, {"group", "pencil"}, {"kind", "presentation"},
         {"source", {{"lines", lines_json(ls)}}}, {"expect", lexpect}});
  }

  for (long m = 2; m <= 6; ++m) {
    auto delta = power_string(variable_minus_one(m, m - 1), static_cast<unsigned>(m - 2));
    json expect = {{"delta0", m - 2}, {"delta", delta}, {"codim_gt_one", m == 2}};
    add({{"name", "near-pencil-family-" + std::to_string(m)}, {"group", "near-pencil"}, {"kind", "presentation"},
         {"source", {{"family", "near-pencil"}, {"m", m}}}, {"expect", expect}});
    if (m < 3) continue;
    std::vector<std::array<long, 3>> ls;
    for (long k = 0; k + 1 < m; ++k) ls.push_back({0, 1, k});
    ls.push_back({1, 0, 0});
    json lexpect = expect;
    lexpect["class"] = "NearPencil";
    lexpect["best"] = m - 2;
    add({{"name", "near-pencil-wiring-" + std::to_string(m)}, {"group", "near-pencil"}, {"kind", "presentation"},
         {"source", {{"lines", lines_json(ls)}}}, {"expect", lexpect}});
  }

  for (long m = 1; m <= 6; ++m) {
    json expect = m == 1 ? json{{"delta0", 0}, {"delta", "1"}, {"codim_gt_one", true}}
                         : json{{"delta0", "infinite"}, {"delta", "0"}, {"codim_gt_one", false}};
    add({{"name", "parallel-family-" + std::to_string(m)}, {"group", "parallel"}, {"kind", "presentation"},
         {"source", {{"family", "parallel"}, {"m", m}}}, {"expect", expect}});
    if (m > 3) continue;
    std::vector<std::array<long, 3>> ls;
    for (long k = 0; k < m; ++k) ls.push_back({0, 1, k});
    json lexpect = expect;
    lexpect["class"] = "AllParallel";
    add({{"name", "parallel-wiring-" + std::to_string(m)}, {"group", "parallel"}, {"kind", "presentation"},
         {"source", {{"lines", lines_json(ls)}}}, {"expect", lexpect}});
  }

  for (long m = 2; m <= 6; ++m) {
    json expect = {{"delta0", 0}, {"delta", "1"}, {"codim_gt_one", true}};
    add({{"name", "generic-family-" + std::to_string(m)}, {"group", "generic"}, {"kind", "presentation"},
         {"source", {{"family", "generic"}, {"m", m}}}, {"expect", expect}});
    std::vector<std::array<long, 3>> ls;
    for (long k = 0; k < m; ++k) ls.push_back({k, -1, -k * k});
    json lexpect = expect;
    lexpect["class"] = "GenericPosition";
    add({{"name", "generic-wiring-" + std::to_string(m)}, {"group", "generic"}, {"kind", "presentation"},
         {"source", {{"lines", lines_json(ls)}}}, {"expect", lexpect}});
  }

  add({{"name", "transversal-pencil-3"}, {"group", "transversal"}, {"kind", "presentation"},
       {"source", {{"lines", lines_json({{0, 1, 0}, {1, -1, 0}, {-1, -1, 0}, {1, 0, 1}})}}},
       {"expect", {{"delta0", 0}, {"class", "HasNodalTransversalLine"}}}});
  add({{"name", "two-parallel-pairs"}, {"group", "other"}, {"kind", "presentation"},
       {"source", {{"lines", lines_json({{0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}})}}},
       {"expect", {{"class", "Other"}, {"best", 3}, {"delta0", 0}}}});

  add({{"name", "hopf"}, {"group", "presentation"}, {"kind", "presentation"},
       {"source", {{"text", "gens: a b\nrel: a b a^-1 b^-1\n"}}},
       {"expect", {{"delta0", 0}, {"delta", "1"}, {"codim_gt_one", true}}}});
  add({{"name", "trefoil"}, {"group", "presentation"}, {"kind", "presentation"},
       {"source", {{"text", "gens: a b\nrel: a b a b^-1 a^-1 b^-1\n"}}},
       {"expect", {{"delta0", 2}, {"delta", "t1^2 - t1 + 1"}, {"codim_gt_one", false}}}});
  add({{"name", "free-1"}, {"group", "presentation"}, {"kind", "presentation"},
       {"source", {{"text", "gens: a\n"}}},
       {"expect", {{"delta0", 0}, {"delta", "1"}}}});

  for (long m = 2; m <= 8; ++m) {
    for (long r = (m + 1) / 2; r <= m; ++r) {
      const long t = m - r;
      const bool hyp = m == 2 || r - t >= 1;
      json expect = {{"hypotheses", hyp}};
      if (hyp && r <= m - 1) expect["intermediate"] = m * m - 3 * m + r + 1;
      else expect["intermediate"] = nullptr;
      expect["best"] = hyp ? json(std::min(m * (m - 2), r <= m - 1 ? m * m - 3 * m + r + 1 : m * (m - 2))) : json(nullptr);
      add({{"name", "curve-" + std::to_string(m) + "-" + std::to_string(r)}, {"group", "curve"}, {"kind", "curve"},
           {"m", m}, {"r", r}, {"tangents", t}, {"expect", expect}});
    }
  }
  return {{"schema", 1}, {"entries", entries}};
}

namespace {

inv::Delta0Value parse_delta0(const json& j) {
  if (j.is_number_integer()) return inv::Delta0Value::finite(j.get<std::int64_t>());
  if (j.is_string() && j.get<std::string>() == "infinite") return inv::Delta0Value::infinite();
  throw std::runtime_error("malformed delta0 expectation " + j.dump());
}

// Recovers a rational token exactly by reusing the arrangement parser.
mpq_class coefficient(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw std::runtime_error("line coefficient must be a string or integer");
  auto in = arr::parse_arrangement("line: 1 0 " + j.get<std::string>() + "\n");
  return in.lines.at(0).c();
}

std::vector<arr::Line> lines_from(const json& j) {
  std::vector<arr::Line> ls;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 3) throw std::runtime_error("a line needs three coefficients");
    ls.emplace_back(coefficient(l[0]), coefficient(l[1]), coefficient(l[2]));
  }
  return ls;
}

void expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  if (got != want) throw std::runtime_error(what + " is " + got + ", expected " + want);
}

void run_presentation_entry(const json& e) {
  const json& src = e.at("source");
  groups::Presentation p;
  std::optional<arr::IntersectionData> data;
  if (src.contains("family")) {
    p = arr::family_presentation(arr::parse_family(src.at("family").get<std::string>()), src.at("m").get<std::size_t>());
  } else if (src.contains("lines")) {
    auto ls = lines_from(src.at("lines"));
    data = arr::intersect_arrangement(ls);
    p = arr::wiring_presentation(ls).presentation;
  } else if (src.contains("text")) {
    p = groups::parse_presentation(src.at("text").get<std::string>());
  } else {
    throw std::runtime_error("source needs family, lines or text");
  }

  for (const auto& r : p.relators)
    if (!fox::check_fundamental_identity(r, p.num_generators()))
      throw std::runtime_error("fundamental identity fails on a relator");

  auto report = inv::compute_invariants(p, inv::Route::Both);
  if (!report.route_agreement)
    throw std::runtime_error("routes disagree: degree " + report.delta0_degree->to_string() + ", pid " +
                             report.delta0_pid->to_string());
  if (e.value("permute", true)) {
    for (std::size_t d = 0; d < report.s; ++d) {
      auto v = inv::delta0_via_pid(p, d);
      if (!(v == report.delta0))
        throw std::runtime_error("distinguished variable " + std::to_string(d + 1) + " gives " + v.to_string());
    }
  }

  std::optional<arr::ClassLabel> label;
  std::optional<arr::BoundReport> bounds;
  if (data) {
    label = arr::classify_arrangement(*data);
    if (label->essential) bounds = arr::combinatorial_bounds(*data);
    auto verdict = arr::vanishing_and_infinite_verdicts(*label, *data);
    if (verdict && !(verdict->value == report.delta0))
      throw std::runtime_error("closed form " + verdict->value.to_string() + " but computed " + report.delta0.to_string());
    if (bounds && report.delta0.is_finite() && report.delta0.value() > *bounds->best)
      throw std::runtime_error("delta_0 exceeds the combinatorial bound");
  }

  for (const auto& [key, want] : e.at("expect").items()) {
    if (key == "delta0") {
      expect_eq("delta0", report.delta0.to_string(), parse_delta0(want).to_string());
    } else if (key == "delta") {
      expect_eq("Delta", report.delta.to_string(), want.get<std::string>());
    } else if (key == "codim_gt_one") {
      expect_eq("codim flag", report.codim_gt_one ? "true" : "false", want.get<bool>() ? "true" : "false");
    } else if (key == "class") {
      if (!label) throw std::runtime_error("class expectation needs a line source");
      expect_eq("class", arr::to_string(label->kind), want.get<std::string>());
    } else if (key == "best") {
      if (!bounds) throw std::runtime_error("best expectation needs an essential line source");
      expect_eq("best bound", std::to_string(*bounds->best), std::to_string(want.get<std::int64_t>()));
    } else {
      throw std::runtime_error("unknown expectation '" + key + "'");
    }
  }
}

void run_curve_entry(const json& e) {
  auto b = arr::curve_at_infinity_bound(e.at("m").get<std::int64_t>(), e.at("r").get<std::int64_t>(),
                                        e.at("tangents").get<std::int64_t>());
  const auto& c = *b.curve;
  if (c.intermediate && *c.intermediate > *c.bound) throw std::runtime_error("intermediate exceeds m(m-2)");
  for (const auto& [key, want] : e.at("expect").items()) {
    if (key == "hypotheses") {
      expect_eq("hypotheses", c.hypotheses_hold ? "true" : "false", want.get<bool>() ? "true" : "false");
    } else if (key == "intermediate") {
      expect_eq("intermediate", opt_int(c.intermediate).dump(), want.dump());
    } else if (key == "best") {
      expect_eq("best", opt_int(c.best).dump(), want.dump());
    } else {
      throw std::runtime_error("unknown expectation '" + key + "'");
    }
  }
}

}  // namespace

SelftestResult run_selftest(const json& corpus, const std::string& filter) {
  SelftestResult res;
  const json& entries = corpus.at("entries");
  std::size_t index = 0;
  for (const auto& e : entries) {
    ++index;
    std::string name = "entry-" + std::to_string(index);
    try {
      if (e.contains("name") && e["name"].is_string()) name = e["name"].get<std::string>();
      const std::string group = e.value("group", "");
      if (!filter.empty() && group != filter && name.rfind(filter, 0) != 0) continue;
      const std::string kind = e.at("kind").get<std::string>();
      if (kind == "presentation") run_presentation_entry(e);
      else if (kind == "curve") run_curve_entry(e);
      else throw std::runtime_error("unknown kind '" + kind + "'");
      ++res.passed;
      res.lines.push_back("PASS " + name);
    } catch (const std::exception& ex) {
      ++res.failed;
      res.lines.push_back("FAIL " + name + ": " + ex.what());
    }
  }
  return res;
}

// ---- command line ---------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander polynomials and higher-order degrees of plane curve complements", "alexdeg"};
  app.require_subcommand(1);

  std::string out_path;
  std::string route_opt = "both";
  std::string via_opt = "wiring";
  std::string family_opt;
  std::size_t m_opt = 0;
  std::string input;
  std::string filter;
  std::string corpus_path;
  bool as_json = false;
  const std::vector<std::string> routes{"degree", "pid", "both"};

  auto* analyze = app.add_subcommand("analyze", "Analyze a line arrangement file");
  analyze->add_option("file", input, "Arrangement file")->required();
  analyze->add_option("--route", route_opt, "delta_0 route")->check(CLI::IsMember(routes));
  analyze->add_option("--via", via_opt, "Presentation source")->check(CLI::IsMember({"wiring", "family"}));

  auto* invariants = app.add_subcommand("invariants", "Invariants of a presentation file");
  invariants->add_option("file", input, "Presentation file")->required();
  invariants->add_option("--route", route_opt, "delta_0 route")->check(CLI::IsMember(routes));

  auto* bounds = app.add_subcommand("bounds", "Classification and combinatorial bounds");
  bounds->add_option("file", input, "Arrangement file")->required();

  auto* presentation = app.add_subcommand("presentation", "Emit a presentation in the DSL");
  presentation->add_option("file", input, "Arrangement file for the wiring sweep");
  presentation->add_option("--family", family_opt, "pencil, near-pencil, parallel or generic");
  presentation->add_option("--m", m_opt, "Number of lines");

  auto* selftest = app.add_subcommand("selftest", "Run the bundled corpus");
  selftest->add_option("--filter", filter, "Group name or name prefix");
  selftest->add_option("--corpus", corpus_path, "Corpus JSON file instead of the bundled one");

  for (auto* sub : {analyze, invariants, bounds, presentation, selftest}) {
    sub->add_option("--out", out_path, "Write output to a file");
    sub->add_flag("--json", as_json, "JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  auto emit = [&](const std::string& text) -> int {
    if (out_path.empty()) {
      out << text;
      return kOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return kParseError;
    }
    f << text;
    return kOk;
  };

  try {
    const auto route = parse_route(route_opt);
    if (analyze->parsed()) {
      bool violation = false;
      auto in = arr::parse_arrangement(read_file(input));
      auto r = analyze_report(in, route, via_opt == "family" ? Via::Family : Via::Wiring, violation);
      r["input"] = input;
      int code = emit(r.dump(2) + "\n");
      if (violation) {
        err << "error: internal invariant violation (see warnings)\n";
        return kInvariantViolation;
      }
      return code;
    }
    if (invariants->parsed()) {
      bool violation = false;
      auto p = groups::parse_presentation(read_file(input));
      auto r = invariants_report(p, route, violation);
      r["input"] = input;
      int code = emit(r.dump(2) + "\n");
      if (violation) {
        err << "error: internal invariant violation (see warnings)\n";
        return kInvariantViolation;
      }
      return code;
    }
    if (bounds->parsed()) {
      auto r = bounds_report(arr::parse_arrangement(read_file(input)));
      r["input"] = input;
      return emit(r.dump(2) + "\n");
    }
    if (presentation->parsed()) {
      groups::Presentation p;
      json meta;
      if (!family_opt.empty()) {
        if (!input.empty()) throw std::invalid_argument("give either a file or --family, not both");
        p = arr::family_presentation(arr::parse_family(family_opt), m_opt);
        meta = {{"source", "family"}, {"family", arr::to_string(arr::parse_family(family_opt))}, {"m", m_opt}};
      } else if (!input.empty()) {
        auto in = arr::parse_arrangement(read_file(input));
        auto w = arr::wiring_presentation(in.lines);
        p = w.presentation;
        meta = {{"source", "wiring"}, {"shear", w.shear}, {"input", input}};
      } else {
        throw std::invalid_argument("presentation needs a file or --family and --m");
      }
      if (!as_json) return emit(groups::serialize_presentation(p));
      meta["schema"] = 1;
      meta["command"] = "presentation";
      meta["text"] = groups::serialize_presentation(p);
      return emit(meta.dump(2) + "\n");
    }
    if (selftest->parsed()) {
      json corpus = corpus_path.empty() ? builtin_corpus() : json::parse(read_file(corpus_path));
      const auto start = std::chrono::steady_clock::now();
      auto res = run_selftest(corpus, filter);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::string text;
      if (as_json) {
        text = res.to_json().dump(2) + "\n";
      } else {
        for (const auto& l : res.lines) text += l + "\n";
        std::ostringstream summary;
        summary << "selftest: " << res.passed << " passed, " << res.failed << " failed (" << secs << " s)\n";
        text += summary.str();
      }
      int code = emit(text);
      if (res.failed > 0) return kSelftestFailed;
      return code;
    }
  } catch (const groups::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const arr::GeometryError& e) {
    err << "geometry error: " << e.what() << "\n";
    return kGeometryError;
  } catch (const ReadError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kSelftestFailed;
  }
  return kOk;
}

}  // namespace alexdeg::app
