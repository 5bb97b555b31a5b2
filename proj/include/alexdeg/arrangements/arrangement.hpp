#pragma once

// Real line arrangements over Q: exact intersection data, classification,
// combinatorial bounds and presentations of the complement group.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alexdeg/alexinv/invariants.hpp"
#include "alexdeg/groups/presentation.hpp"

namespace alexdeg::arr {

// Input describes something that is not a valid arrangement (duplicate or
// degenerate lines, no lines, inconsistent curve data).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a x + b y = c, normalized so the first nonzero of (a, b) is 1.
class Line {
 public:
  // Throws GeometryError when a = b = 0.
  Line(mpq_class a, mpq_class b, mpq_class c);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& c() const { return c_; }
  bool parallel_to(const Line& o) const { return a_ == o.a_ && b_ == o.b_; }
  std::string to_string() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  mpq_class a_, b_, c_;
};

struct Point {
  mpq_class x, y;
  // Indices of the lines through the point, ascending; size >= 2.
  std::vector<std::size_t> lines;
  std::size_t multiplicity() const { return lines.size(); }
};

struct IntersectionData {
  std::size_t m = 0;
  std::vector<Line> lines;
  // Sorted by (x, y).
  std::vector<Point> points;
  // Partition of line indices by direction, each class ascending, classes
  // ordered by their smallest member.
  std::vector<std::vector<std::size_t>> parallel_classes;
  // Multiplicities d of the points on each line, in point order.
  std::vector<std::vector<std::size_t>> line_multiplicities;
  // Index into parallel_classes for each line.
  std::vector<std::size_t> class_of;

  std::size_t class_size(std::size_t line) const { return parallel_classes[class_of[line]].size(); }
};

// Throws GeometryError on empty input or duplicate lines.
IntersectionData intersect_arrangement(const std::vector<Line>& lines);

enum class ArrangementClass { AllParallel, Pencil, NearPencil, GenericPosition, HasNodalTransversalLine, Other };

std::string to_string(ArrangementClass c);

struct ClassLabel {
  ArrangementClass kind = ArrangementClass::Other;
  bool essential = false;
  // Index of the transversal line for NearPencil and HasNodalTransversalLine.
  std::optional<std::size_t> transversal;
};

// Precedence: AllParallel > Pencil > NearPencil > GenericPosition >
// HasNodalTransversalLine > Other. Pencil and NearPencil need m >= 3.
ClassLabel classify_arrangement(const IntersectionData& data);

// Closed-form delta_n valid for all n.
struct Verdict {
  inv::Delta0Value value;
  std::string statement;
  std::string citation;
};

std::optional<Verdict> vanishing_and_infinite_verdicts(const ClassLabel& label,
                                                        const IntersectionData& data);

struct LineBound {
  std::size_t line = 0;
  std::size_t class_size = 1;
  std::int64_t sum_squares = 0;  // sum over the line's points of (d - 1)^2
  std::int64_t bound = 0;
};

struct CurveBound {
  std::int64_t m = 0, r = 0, tangents = 0;
  bool hypotheses_hold = false;
  std::optional<std::int64_t> intermediate;  // m^2 - 3m + r + 1 when r <= m - 1
  std::optional<std::int64_t> bound;         // m(m - 2) when the hypotheses hold
  std::optional<std::int64_t> best;
};

struct BoundReport {
  std::int64_t m = 0;
  std::optional<std::int64_t> global;  // m(m - 2)
  std::vector<LineBound> per_line;
  std::optional<CurveBound> curve;
  std::optional<std::int64_t> best;
  std::optional<Verdict> closed_form;
};

// Tube bounds per line. Throws GeometryError for non-essential input.
BoundReport combinatorial_bounds(const IntersectionData& data);

// Curve of degree m meeting the line at infinity in r points, `tangents` of
// them simple tangencies and the rest transversal. Throws GeometryError
// unless 1 <= r <= m and tangents = m - r <= r.
BoundReport curve_at_infinity_bound(std::int64_t m, std::int64_t r, std::int64_t tangents);

enum class Family { Pencil, NearPencil, Parallel, Generic };

std::string to_string(Family f);
// Accepts "pencil", "near-pencil" (or "nearpencil", "near_pencil"),
// "parallel", "generic". Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

// Throws std::invalid_argument below the family minimum (Pencil 3,
// NearPencil 2, others 1).
groups::Presentation family_presentation(Family f, std::size_t m);

struct WiringResult {
  groups::Presentation presentation;
  // x' = x + shear * y is the sweep coordinate.
  std::int64_t shear = 0;
};

// Generator i is the meridian of input line i. Throws GeometryError on
// empty input or duplicate lines.
WiringResult wiring_presentation(const std::vector<Line>& lines);

struct CurveSpec {
  std::int64_t m = 0, r = 0, tangents = 0;
};

struct ArrangementInput {
  std::vector<Line> lines;
  std::optional<CurveSpec> curve;
};

// `line: a b c` with integer or p/q tokens, `curve: m=<int> r=<int>
// tangents=<int>`, `#` comments. Throws groups::ParseError on bad syntax and
// GeometryError on degenerate lines.
ArrangementInput parse_arrangement(std::string_view text);

}  // namespace alexdeg::arr
