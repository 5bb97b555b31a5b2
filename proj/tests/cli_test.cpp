#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"

using namespace alexdeg::app;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "alexdeg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto dir = fs::temp_directory_path() / "alexdeg_cli_test";
  fs::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("analyze pencil of three lines") {
  auto path = write_temp("pencil3.txt", "# three lines through the origin\nline: 0 1 0\nline: 1 -1 0\nline: 1 1 0\n");
  auto r = cli({"analyze", path});
  REQUIRE(r.code == kOk);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["invariants"]["delta0"] == 3);
  CHECK(j["invariants"]["alexander_polynomial"] == "t1*t2*t3 - 1");
  CHECK(j["classification"]["label"] == "Pencil");
  CHECK(j["invariants"]["route_agreement"] == true);
}

TEST_CASE("analyze parallel and near-pencil files") {
  auto par = cli({"analyze", write_temp("par2.txt", "line: 0 1 0\nline: 0 1 1\n")});
  REQUIRE(par.code == kOk);
  auto pj = json::parse(par.out);
  CHECK(pj["invariants"]["delta0"] == "infinite");
  CHECK(pj["classification"]["label"] == "AllParallel");
  CHECK(pj["bounds"].is_null());

  auto np_path = write_temp("np4.txt", "line: 0 1 0\nline: 0 1 1\nline: 0 1 2\nline: 1 0 0\n");
  for (const char* via : {"wiring", "family"}) {
    auto np = cli({"analyze", np_path, "--via", via});
    REQUIRE(np.code == kOk);
    auto j = json::parse(np.out);
    CHECK(j["invariants"]["delta0"] == 2);
    CHECK(j["bounds"]["best"] == 2);
    CHECK(j["presentation"]["source"] == via);
    CHECK(j["invariants"]["alexander_polynomial"] == "t4^2 - 2*t4 + 1");
  }
}

TEST_CASE("invariants command") {
  auto hopf = cli({"invariants", write_temp("hopf.txt", "gens: a b\nrel: a b a^-1 b^-1\n")});
  REQUIRE(hopf.code == kOk);
  auto h = json::parse(hopf.out);
  CHECK(h["invariants"]["delta0"] == 0);
  CHECK(h["invariants"]["alexander_polynomial"] == "1");

  auto tref = json::parse(cli({"invariants", write_temp("tref.txt", "gens: a b\nrel: a b a b^-1 a^-1 b^-1\n")}).out);
  CHECK(tref["invariants"]["delta0"] == 2);
  CHECK(tref["invariants"]["alexander_polynomial"] == "t1^2 - t1 + 1");

  auto f1 = json::parse(cli({"invariants", write_temp("f1.txt", "gens: a\n")}).out);
  CHECK(f1["invariants"]["delta0"] == 0);

  auto torsion = json::parse(cli({"invariants", write_temp("tor.txt", "gens: a b\nrel: a^2\nrel: a b a^-1 b^-1\n")}).out);
  CHECK_FALSE(torsion["warnings"].empty());

  auto pid = json::parse(cli({"invariants", write_temp("tref2.txt", "gens: a b\nrel: a b a b^-1 a^-1 b^-1\n"), "--route", "pid"}).out);
  CHECK(pid["invariants"]["delta0_degree"].is_null());
  CHECK(pid["invariants"]["delta0_pid"] == 2);

  auto trivial = cli({"invariants", write_temp("triv.txt", "gens: a\nrel: a\n")});
  CHECK(trivial.code == kOk);
  CHECK(json::parse(trivial.out)["invariants"].is_null());
}

TEST_CASE("bounds and curve mode") {
  auto r = cli({"bounds", write_temp("curve.txt", "curve: m=4 r=3 tangents=1\n")});
  REQUIRE(r.code == kOk);
  auto j = json::parse(r.out);
  CHECK(j["curve"]["best"] == 8);
  CHECK(j["curve"]["intermediate"] == 8);
  auto pairs = json::parse(cli({"bounds", write_temp("pairs.txt", "line: 0 1 0\nline: 0 1 1\nline: 1 0 0\nline: 1 0 1\n")}).out);
  CHECK(pairs["bounds"]["best"] == 3);
  CHECK(pairs["classification"]["label"] == "Other");
  CHECK(cli({"bounds", write_temp("badcurve.txt", "curve: m=4 r=3 tangents=2\n")}).code == kGeometryError);
}

TEST_CASE("presentation command") {
  auto r = cli({"presentation", "--family", "near-pencil", "--m", "3"});
  REQUIRE(r.code == kOk);
  CHECK(r.out == "gens: x1 x2 x3\nrel: x1 x3 x1^-1 x3^-1\nrel: x2 x3 x2^-1 x3^-1\n");
  auto w = cli({"presentation", write_temp("two.txt", "line: 0 1 0\nline: 1 0 0\n")});
  REQUIRE(w.code == kOk);
  auto p = alexdeg::groups::parse_presentation(w.out);
  CHECK(p.num_generators() == 2);
  CHECK(cli({"presentation", "--family", "pencil", "--m", "2"}).code == kParseError);
  CHECK(cli({"presentation"}).code == kParseError);
  auto j = json::parse(cli({"presentation", "--family", "pencil", "--m", "3", "--json"}).out);
  CHECK(j["family"] == "pencil");
}

TEST_CASE("exit codes") {
  CHECK(cli({"analyze", write_temp("bad.txt", "line: 0 x 0\n")}).code == kParseError);
  CHECK(cli({"analyze", write_temp("dup.txt", "line: 0 1 0\nline: 0 2 0\n")}).code == kGeometryError);
  CHECK(cli({"analyze", write_temp("degenerate.txt", "line: 0 0 1\n")}).code == kGeometryError);
  CHECK(cli({"analyze", write_temp("empty.txt", "# nothing\n")}).code == kGeometryError);
  CHECK(cli({"analyze", "/nonexistent/file"}).code == kParseError);
  CHECK(cli({"invariants", write_temp("badp.txt", "gens: a\nrel: b\n")}).code == kParseError);
  CHECK(cli({"invariants", write_temp("badexp.txt", "gens: a\nrel: a^q\n")}).code == kParseError);
  CHECK(cli({"frobnicate"}).code == kParseError);
  CHECK(cli({"analyze", write_temp("ok.txt", "line: 0 1 0\n"), "--route", "sideways"}).code == kParseError);
  CHECK(cli({"--help"}).code == kOk);
}

TEST_CASE("reports are deterministic and round-trip") {
  auto path = write_temp("pt.txt", "line: 0 1 0\nline: 1 -1 0\nline: 1 1 0\nline: 1 0 1\n");
  auto a = cli({"analyze", path});
  auto b = cli({"analyze", path});
  REQUIRE(a.code == kOk);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j.dump(2) + "\n" == a.out);
  CHECK(j["classification"]["label"] == "HasNodalTransversalLine");
  CHECK(j["closed_form"]["delta_n"] == 0);
  CHECK(j["invariants"]["delta0"] == 0);
}

TEST_CASE("out flag writes a file") {
  auto target = (fs::temp_directory_path() / "alexdeg_cli_test" / "report.json").string();
  fs::remove(target);
  auto r = cli({"analyze", write_temp("p.txt", "line: 0 1 0\nline: 1 0 0\n"), "--out", target});
  CHECK(r.code == kOk);
  CHECK(r.out.empty());
  std::ifstream in(target);
  json j = json::parse(in);
  CHECK(j["invariants"]["delta0"] == 0);
}

TEST_CASE("selftest") {
  auto all = cli({"selftest"});
  CHECK(all.code == kOk);
  CHECK(all.out.find("FAIL") == std::string::npos);

  auto pencil = cli({"selftest", "--filter", "pencil", "--json"});
  REQUIRE(pencil.code == kOk);
  auto j = json::parse(pencil.out);
  CHECK(j["passed"] == 8);
  for (const auto& line : j["results"]) CHECK(line.get<std::string>().rfind("PASS pencil-", 0) == 0);

  auto corpus = builtin_corpus();
  corpus["entries"][0]["expect"]["delta0"] = 4;
  corpus["entries"].push_back({{"name", "broken-entry"}, {"kind", "presentation"}});
  auto bad = cli({"selftest", "--corpus", write_temp("corpus.json", corpus.dump())});
  CHECK(bad.code == kSelftestFailed);
  CHECK(bad.out.find("FAIL pencil-family-3") != std::string::npos);
  CHECK(bad.out.find("FAIL broken-entry") != std::string::npos);

  CHECK(cli({"selftest", "--corpus", write_temp("garbage.json", "{not json")}).code == kParseError);
}
