#pragma once

// Command-line front end. Everything is reachable in-process so the tests
// can drive it without spawning the binary.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alexdeg/alexinv/invariants.hpp"
#include "alexdeg/arrangements/arrangement.hpp"

namespace alexdeg::app {

using nlohmann::json;

enum ExitCode { kOk = 0, kSelftestFailed = 1, kParseError = 2, kGeometryError = 3, kInvariantViolation = 4 };

enum class Via { Wiring, Family };

json delta0_json(const inv::Delta0Value& v);

// Report for an arrangement file's contents. Sets `violation` when the two
// routes disagree or a computed value contradicts a closed form.
json analyze_report(const arr::ArrangementInput& in, inv::Route route, Via via, bool& violation);

// Report for a presentation.
json invariants_report(const groups::Presentation& p, inv::Route route, bool& violation);

// Bounds and classification only.
json bounds_report(const arr::ArrangementInput& in);

struct SelftestResult {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> lines;  // "PASS name" / "FAIL name: reason"
  json to_json() const;
};

json builtin_corpus();

// Entries match `filter` when their group equals it or their name starts
// with it; an empty filter matches everything.
SelftestResult run_selftest(const json& corpus, const std::string& filter);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alexdeg::app
