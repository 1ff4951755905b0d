#include <sstream>

#include "cli_app.hpp"
#include "doctest.h"
#include "eulerian/text.hpp"
#include "json.hpp"
#include "test_util.hpp"

using namespace eulerian;
using nlohmann::json;
using testutil::P;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run table(cli::TableOptions opt) {
  std::ostringstream out, err;
  const int code = cli::run_table(opt, out, err);
  return {code, out.str(), err.str()};
}

Run expand(cli::ExpandOptions opt) {
  std::ostringstream out, err;
  const int code = cli::run_expand(opt, out, err);
  return {code, out.str(), err.str()};
}

Run verify(cli::VerifyOptions opt) {
  std::ostringstream out, err;
  const int code = cli::run_verify(opt, out, err);
  return {code, out.str(), err.str()};
}

void check_schema(const json& doc, const std::string& command) {
  CHECK(doc.at("command") == command);
  CHECK(doc.at("version").is_string());
  CHECK(doc.at("params").is_object());
  CHECK(doc.at("results").is_array());
}

std::vector<std::string> csv_data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("table golden csv") {
  const auto r = table({.kind = "eulerian", .n_max = 3, .format = "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(csv_data_lines(r.out) == std::vector<std::string>{"1", "1", "1,1", "1,4,1"});
}

TEST_CASE("table golden json") {
  const auto r = table({.kind = "deg-eulerian", .n_max = 2, .format = "json"});
  CHECK(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  check_schema(doc, "table");
  CHECK(doc["params"]["kind"] == "deg-eulerian");
  CHECK(doc["results"][2]["n"] == 2);
  CHECK(doc["results"][2]["row"] == json::array({"1-\xce\xbb", "1"}));
}

TEST_CASE("table csv and json agree entry for entry") {
  for (const std::string kind :
       {"eulerian", "stirling1", "stirling2", "deg-eulerian", "deg-stirling1", "ordered-bell"}) {
    const auto rj = table({.kind = kind, .n_max = 5, .format = "json"});
    const auto rc = table({.kind = kind, .n_max = 5, .format = "csv"});
    CHECK(rj.code == cli::kExitOk);
    CHECK(rc.code == cli::kExitOk);
    const json doc = json::parse(rj.out);
    const auto lines = csv_data_lines(rc.out);
    REQUIRE(lines.size() == doc["results"].size());
    for (std::size_t n = 0; n < lines.size(); ++n) {
      std::string joined;
      for (const auto& cell : doc["results"][n]["row"]) {
        if (!joined.empty()) joined += ",";
        joined += cell.get<std::string>();
      }
      CHECK(joined == lines[n]);
    }
  }
}

TEST_CASE("table usage errors") {
  CHECK(table({.kind = "bogus", .n_max = 3, .format = "csv"}).code == cli::kExitUsage);
  CHECK(table({.kind = "eulerian", .n_max = -1, .format = "csv"}).code == cli::kExitUsage);
  CHECK(table({.kind = "eulerian", .n_max = 3, .format = "xml"}).code == cli::kExitUsage);
}

TEST_CASE("expand goldens") {
  const auto r = expand({.gf = "deg-eulerian", .order = 2, .bindings = {{"t", "2"}}});
  CHECK(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  check_schema(doc, "expand");
  CHECK(doc["results"][0]["value"] == "1");
  CHECK(doc["results"][1]["value"] == "1");
  CHECK(doc["results"][2]["value"] == "3-\xce\xbb");

  const auto r2 = expand({.gf = "eulerian", .order = 3});
  const json doc2 = json::parse(r2.out);
  CHECK(doc2["results"][2]["value"] == "1+t");
  CHECK(doc2["results"][3]["value"] == "1+4t+t^2");
}

TEST_CASE("expand respects bindings, poles and usage errors") {
  CHECK(expand({.gf = "frobenius-euler", .order = 1, .bindings = {{"u", "1"}}}).code ==
        cli::kExitPole);
  CHECK(expand({.gf = "eulerian", .order = 2, .bindings = {{"t", "1"}}}).code == cli::kExitPole);
  CHECK(expand({.gf = "eulerian", .order = 2, .bindings = {{"q", "1"}}}).code == cli::kExitUsage);
  CHECK(expand({.gf = "eulerian", .order = 2, .bindings = {{"zz", "1"}}}).code == cli::kExitUsage);
  CHECK(expand({.gf = "nope", .order = 2}).code == cli::kExitUsage);
  CHECK(expand({.gf = "eulerian", .order = -1}).code == cli::kExitUsage);
  CHECK(expand({.gf = "eulerian", .order = 2, .bindings = {{"t", "x+1"}}}).code ==
        cli::kExitUsage);

  // lambda alias and rational binding values
  // b_2(x) = x^2+(2-λ)x+3-λ at λ = 1/2
  const auto r = expand({.gf = "ordered-bell", .order = 2, .bindings = {{"lambda", "1/2"}}});
  CHECK(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["results"][2]["value"] == "5/2+3/2*x+x^2");
}

TEST_CASE("expand values round-trip through the parser") {
  const auto r = expand({.gf = "frobenius-euler", .order = 4});
  REQUIRE(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  classical::FrobeniusEulerSequence fe;
  for (long n = 0; n <= 4; ++n) {
    const RatFun parsed = parse_ratfun(doc["results"][n]["value"].get<std::string>());
    CHECK(parsed == fe.poly(n));
  }
}

TEST_CASE("verify command") {
  const auto r = verify({.identities = {"EQ09_WORPITZKY"}, .n_max = 6});
  CHECK(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  check_schema(doc, "verify");
  CHECK(doc["results"].size() == 1);
  const json report = doc["results"][0]["report"];
  CHECK(report["id"] == "EQ09_WORPITZKY");
  CHECK(report["status"] == "pass");
  CHECK(report["range"]["n_max"] == 6);
  CHECK(!report.contains("counterexample"));

  CHECK(verify({.identities = {"EQ99"}, .n_max = 6}).code == cli::kExitUsage);
  CHECK(verify({.identities = {"all"}, .n_max = -2}).code == cli::kExitUsage);
  CHECK(verify({.identities = {}, .n_max = 2, .format = "csv"}).code == cli::kExitUsage);

  const auto all = verify({.identities = {"all"}, .n_max = 2});
  CHECK(all.code == cli::kExitOk);
  const json alldoc = json::parse(all.out);
  CHECK(alldoc["results"].size() == catalog::kIdentityCount);
}

TEST_CASE("table json values round-trip") {
  const auto r = table({.kind = "ordered-bell", .n_max = 6, .format = "json"});
  REQUIRE(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  classical::EulerianTriangle tri;
  classical::StirlingTriangles st;
  for (long n = 0; n <= 6; ++n) {
    const MPoly parsed =
        parse_mpoly(doc["results"][n]["row"][0].get<std::string>());
    CHECK(parsed == degenerate::ordered_bell(n, tri, st));
  }
}
