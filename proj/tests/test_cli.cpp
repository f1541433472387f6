#include <doctest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "realbezout/deform.hpp"
#include "realbezout/poly_io.hpp"

using namespace rbz;
using namespace rbz::cli;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(RBZ_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json without_timing(Json r) {
  r.erase("elapsed_ms");
  return r;
}

}  // namespace

TEST_CASE("bound on the example 11 profile flags the hypothesis") {
  BoundArgs a;
  a.profile_text = data("ex11_d3_profile.json");
  const Json r = cmd_bound(a, {});
  CHECK(r["bound"]["hypothesis_violated"] == true);
  CHECK(r["bound"]["structural_sum"].is_string());
  CHECK(r["bound"]["witness_term"] == "72");
  CHECK(exit_code(r) == kExitOk);
  for (const auto& t : r["bound"]["terms"]) {
    CHECK(t["tau"][0] == 3);
    CHECK(t["f"] == t["lemma58_card"]);
  }
}

TEST_CASE("bound with a single polynomial is d^k") {
  BoundArgs a;
  a.profile_text = data("ell1_profile.json");
  CHECK(cmd_bound(a, {})["bound"]["structural_sum"] == "9");
}

TEST_CASE("bound scales the asymptotic value by c^k") {
  BoundArgs a;
  a.profile_text = data("ell1_profile.json");
  GlobalOptions g;
  g.constant_base = Rational(3);
  CHECK(cmd_bound(a, g)["bound"]["asymptotic_value"] == "81");
}

TEST_CASE("bound sign-condition and subset modes") {
  BoundArgs a;
  a.profile_text = data("ex15_k2_profile.json");
  a.mode = BoundMode::kSignConditions;
  a.s = 1;
  a.d = 1;
  const Json r = cmd_bound(a, {});
  CHECK(r["delta"]["structural_sum"] == "108");
  CHECK(r["structural_total"] == "108");
  CHECK(r["degree_hypothesis_violated"] == true);

  a.mode = BoundMode::kSubsets;
  a.family_degs = {1, 2, 3};
  const Json s = cmd_bound(a, {});
  CHECK(s["subsets"] == 1);  // k_ell = 0 leaves only the empty subset
  CHECK(s["d_I"].size() == 1);
  CHECK(s["degree_product"] == "8");
}

TEST_CASE("bad profiles are usage errors") {
  BoundArgs a;
  a.profile_text = data("empty_profile.json");
  CHECK_THROWS_AS(cmd_bound(a, {}), UsageError);
  a.profile_text = data("malformed_profile.json");
  try {
    cmd_bound(a, {});
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("line 3, column 1") != std::string::npos);
  }
  a.profile_text = R"({"k": 2, "degs": [], "dims": [2]})";
  CHECK_THROWS_AS(cmd_bound(a, {}), UsageError);
  a.profile_text = R"({"k": 2, "degs": [2], "dims": [3, 0]})";
  CHECK_THROWS_AS(cmd_bound(a, {}), UsageError);
}

TEST_CASE("verify reproduces the family counts") {
  VerifyArgs v;
  v.example = 15;
  v.k = 2;
  v.dims = {2, 1, 0};
  v.degs = {2, 4};
  const Json r = cmd_verify(v, {});
  CHECK(r["count"]["upper"] == "2");
  CHECK(r["count"]["exact"] == true);
  CHECK(exit_code(r) == kExitOk);
  CHECK(r["verdicts"][1]["statement"].get<std::string>().rfind("actual 2 <= structural_sum", 0) == 0);

  VerifyArgs w;
  w.example = 11;
  w.d = 4;
  const Json s = cmd_verify(w, {});
  CHECK(s["count"]["upper"] == "16");
  CHECK(exit_code(s) == kExitOk);
}

TEST_CASE("a profile that understates the degrees fails its verdict") {
  CensusArgs c;
  c.system = parse_system(data("four_points.txt"));
  c.box = parse_box("-1:4,-1:1");
  c.profile_text = data("linear_profile.json");
  const Json r = cmd_census(c, {});
  CHECK(r["total_upper"] == "4");
  CHECK(exit_code(r) == kExitVerdict);
  CHECK(r["failures"] == Json::array({"sign_total_dominated"}));
}

TEST_CASE("verify rejects unknown examples") {
  VerifyArgs v;
  v.example = 12;
  CHECK_THROWS_AS(cmd_verify(v, {}), UsageError);
  v.example = 15;
  v.k = 2;
  v.dims = {2, 1, 0};
  v.degs = {3, 4};
  CHECK_THROWS_AS(cmd_verify(v, {}), UsageError);
}

TEST_CASE("census report") {
  CensusArgs c;
  c.system = parse_system(data("ex15_k2_system.txt"));
  c.family = parse_system(data("pfamily_x2.txt"));
  c.box = parse_box("0:3,0:3");
  c.profile_text = data("ex15_k2_profile.json");
  const Json r = cmd_census(c, {});
  REQUIRE(r["per_sign"].size() == 2);
  CHECK(r["per_sign"][0]["key"] == Json::array({-1}));
  CHECK(r["per_sign"][0]["upper"] == "1");
  CHECK(r["per_sign"][1]["key"] == Json::array({1}));
  CHECK(r["total_upper"] == "2");
  CHECK(r["bound"]["structural_total"] == "108");
  CHECK(exit_code(r) == kExitOk);
}

TEST_CASE("census input checks") {
  CensusArgs c;
  c.system = parse_system(data("ex15_k2_system.txt"));
  c.box = parse_box("0:3");
  CHECK_THROWS_AS(cmd_census(c, {}), UsageError);
  CHECK_THROWS_AS(parse_box("0:3,1"), UsageError);
  CHECK_THROWS_AS(parse_box("3:0"), UsageError);
  CHECK(parse_box("-1/2:4").front() == Interval(ratio(-1, 2), Rational(4)));
}

TEST_CASE("deform audit") {
  DeformArgs d;
  d.profile_text = data("k2_profile.json");
  d.chain = {2, 1, 0};
  GlobalOptions g;
  g.seed = 7;
  const Json r = cmd_deform_audit(d, g);
  CHECK(r["seed"] == 7);
  CHECK(exit_code(r) == kExitOk);
  CHECK(r["tuples"].size() == 1);
  CHECK(r["tuples"][0]["p_tuple"].is_string());
  CHECK(without_timing(r) == without_timing(cmd_deform_audit(d, g)));
}

TEST_CASE("deform audit schedule errors") {
  DeformArgs d;
  d.profile_text = data("ell1_profile.json");
  d.chain = {2, 0};
  d.schedule = std::vector<Rational>{ratio(1, 4), ratio(1, 2), ratio(1, 8)};
  try {
    cmd_deform_audit(d, {});
    FAIL("expected a schedule error");
  } catch (const ScheduleError& e) {
    CHECK(std::string(e.what()).rfind("schedule ordering", 0) == 0);
  }
  d.schedule.reset();
  d.chain = {1, 0};
  CHECK_THROWS_AS(cmd_deform_audit(d, {}), UsageError);
}

TEST_CASE("reports round-trip byte for byte") {
  BoundArgs a;
  a.profile_text = data("ex11_d3_profile.json");
  VerifyArgs v;
  v.example = 11;
  v.d = 2;
  DeformArgs d;
  d.profile_text = data("ex11_d3_profile.json");
  d.chain = {3, 2, 2};
  for (const Json& r : {cmd_bound(a, {}), cmd_verify(v, {}), cmd_deform_audit(d, {}), error_report("bound", "x")}) {
    const std::string text = render(r);
    CHECK(render(parse_report(text)) == text);
  }
}

TEST_CASE("list parsing") {
  CHECK(parse_int_list("3, 2,2") == std::vector<std::int64_t>{3, 2, 2});
  CHECK_THROWS_AS(parse_int_list("3,a"), UsageError);
  CHECK_THROWS_AS(parse_int_list(""), UsageError);
  CHECK(parse_rational_list("1/2,3") == std::vector<Rational>{ratio(1, 2), Rational(3)});
}
