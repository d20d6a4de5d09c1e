#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "bhcr/cli.hpp"
#include "bhcr/fixtures.hpp"
#include "bhcr/report.hpp"
#include "support.hpp"

using namespace bhcr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bhcr");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

void check_schema(const Json& j) {
  CHECK(j.size() == 6);
  for (const char* key : {"input", "weights", "groups", "transpose", "borcea_voisin", "verdicts"}) CHECK(j.contains(key));
}

}  // namespace

TEST_CASE("analysis report round trips through JSON") {
  for (const auto& row : elliptic_table()) {
    auto report = analyze(row.potential.to_string(), true);
    auto back = analysis_from_json(Json::parse(to_json(report).dump()));
    CHECK(back == report);
  }
  auto k3 = analyze("y0^2+y1^5*y2+y2^5*y3+y3^6", false);
  CHECK(analysis_from_json(to_json(k3)) == k3);
  auto non_cy = analyze("x0^2+x1^3", true);
  CHECK_FALSE(non_cy.primal.sl_tilde_order);
  CHECK(analysis_from_json(to_json(non_cy)) == non_cy);
}

TEST_CASE("analyze") {
  auto j = run_json({"analyze", "x0^2+x1^4+x2^4"});
  check_schema(j);
  CHECK(j["weights"]["weights"] == Json::array({2, 1, 1}));
  CHECK(j["weights"]["degree"] == 4);
  CHECK(j["groups"]["sl_order"] == 8);
  CHECK(j["groups"]["sl_tilde_order"] == 2);
  CHECK(j["verdicts"]["calabi_yau"] == true);
  CHECK(j["transpose"].is_null());

  auto k = run_json({"analyze", "y0^2+y1^5*y2+y2^5*y3+y3^6", "--transpose"});
  CHECK(k["weights"]["weights"] == Json::array({3, 1, 1, 1}));
  CHECK(k["weights"]["degree"] == 6);
  CHECK(k["transpose"]["weights"]["weights"] == Json::array({25, 10, 8, 7}));
  CHECK(k["weights"]["charges"] == Json::array({"1/2", "1/6", "1/6", "1/6"}));

  CHECK(run({"analyze", "x0^2+x1^3"}).code == 0);
  auto bad = run({"analyze", "x0^2+x1^3", "--require-cy"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("NonCalabiYau") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"analyze"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"analyze", "x0^2+x1^2+x2^2+x0^3"}).code == 1);
  CHECK(run({"analyze", "x0^2*x1^3+x1^2"}).code == 2);
  CHECK(run({"triple", "3", "2", "0"}).code == 1);
  CHECK(run({"triple", "14", "6", "0"}).code == 2);
  CHECK(run({"triple", "10", "8", "0"}).code == 2);
  CHECK(run({"group", "x0^2+x1^4+x2^4", "--generators", "1/3,0,0"}).code == 1);
  CHECK(run({"mirror-bv", "x0^2+x1^3+x2^6", "y0^2+y1^3+y2^12+y3^12"}).code == 2);
  CHECK(run({"mirror-bv", "x0^2+x1^3*x2+x2^4", "y0^2+y1^6+y2^6+y3^6"}).code == 2);
  CHECK(run({"mirror-bv", "x0^2+x1^4+x2^4", "y0^2+y1^5*y2+y2^5*y3+y3^6", "--triple", "1,1"}).code == 1);
  CHECK(run({"table", "sideways"}).code == 1);
}

TEST_CASE("enumeration cap from the environment") {
  setenv("BHCR_ENUM_CAP", "10", 1);
  auto r = run({"analyze", "x0^3+x1^3+x2^3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("EnumerationCapExceeded") != std::string::npos);
  setenv("BHCR_ENUM_CAP", "ten", 1);
  CHECK(run({"analyze", "x0^3+x1^3+x2^3"}).code == 1);
  unsetenv("BHCR_ENUM_CAP");
  set_default_enumeration_cap(1'000'000);
  CHECK(run({"analyze", "x0^3+x1^3+x2^3"}).code == 0);
}

TEST_CASE("transpose") {
  auto r = run({"transpose", "x0^2+x1^3*x2+x2^4"});
  CHECK(r.code == 0);
  CHECK(r.out == "x0^2+x1^3+x1*x2^4\n");
  auto j = run_json({"transpose", "x0^2+x1^3*x2+x2^4"});
  check_schema(j);
  CHECK(j["transpose"]["polynomial"] == "x0^2+x1^3+x1*x2^4");
}

TEST_CASE("group") {
  auto j = run_json({"group", "x0^2+x1^4+x2^4", "--generators", "1/2,0,1/2"});
  check_schema(j);
  CHECK(j["groups"]["subgroup_order"] == 2);
  CHECK(j["transpose"]["subgroup_order"] == 1);
  CHECK(j["verdicts"]["double_transpose"] == true);
  auto t = run_json({"group", "x0^2+x1^4+x2^4"});
  CHECK(t["transpose"]["subgroup_order"] == 2);
}

TEST_CASE("mirror-bv on the worked example") {
  auto j = run_json({"mirror-bv", "x0^2+x1^4+x2^4", "y0^2+y1^5*y2+y2^5*y3+y3^6", "--triple", "1,1,1"});
  check_schema(j);
  CHECK(j["weights"]["product"]["weights"] == Json::array({3, 3, 2, 2, 2}));
  CHECK(j["weights"]["product"]["degree"] == 12);
  CHECK(j["transpose"]["weights"]["weights"] == Json::array({25, 25, 20, 16, 14}));
  CHECK(j["transpose"]["weights"]["degree"] == 100);
  CHECK(j["transpose"]["G_ES^T"].size() == 2);
  CHECK(j["transpose"]["G_ES^T_split_representatives"][1] == Json::array({"1/4", "3/4", "0", "0", "0"}));
  CHECK(j["borcea_voisin"]["hodge"]["h11"] == 6);
  CHECK(j["borcea_voisin"]["hodge"]["h21"] == 60);
  CHECK(j["borcea_voisin"]["mirror_hodge"]["h11"] == 60);
  CHECK(j["borcea_voisin"]["mirror_hodge"]["h21"] == 6);
  CHECK(j["verdicts"]["transposed_weights"] == true);
  CHECK(j["verdicts"]["splitting"] == true);
  CHECK(j["verdicts"]["hodge_swap"] == true);
}

TEST_CASE("mirror-bv with full groups") {
  auto j = run_json({"mirror-bv", "x0^2+x1^4+x2^4", "y0^2+y1^5*y2+y2^5*y3+y3^6", "--curve-generators", "0,1/4,3/4"});
  CHECK(j["groups"]["G_E"].size() == 2);
  CHECK(j["transpose"]["G_ES^T"].size() == 1);
  CHECK(j["verdicts"]["splitting"] == true);
}

TEST_CASE("table") {
  auto r = run({"table", "verify"});
  CHECK(r.code == 0);
  auto j = run_json({"table", "verify"});
  check_schema(j);
  CHECK(j["verdicts"]["all_pass"] == true);
  CHECK(j["groups"][0]["sl_order"] == 9);
  CHECK(j["groups"][0]["sl_tilde_order"] == 3);
  CHECK(j["transpose"][7]["mirror_index"] == 12);
  CHECK(j["transpose"][11]["mirror_index"] == 8);
  CHECK(run({"table", "print"}).out.find("x0^2+x1^3*x2+x2^4") != std::string::npos);
}

TEST_CASE("table verification reports a broken row") {
  auto rows = parse_elliptic_table("1 1 1,1,1 9 2 x0^3+x1^3+x2^3\n");
  auto checks = verify_elliptic_table(rows);
  REQUIRE(checks.size() == 1);
  CHECK_FALSE(checks[0].ok());
  CHECK(checks[0].failing_field() == "|SL(W)/J_W|");
}

TEST_CASE("triple") {
  auto j = run_json({"triple", "1", "1", "1"});
  check_schema(j);
  CHECK(j["borcea_voisin"]["fixed_locus"]["genus"] == 10);
  CHECK(j["borcea_voisin"]["fixed_locus"]["rational_curves"] == 0);
  CHECK(j["borcea_voisin"]["mirror_triple"] == Json::array({19, 1, 1}));
  CHECK(j["borcea_voisin"]["availability"] == "Available");
  CHECK(run_json({"triple", "2", "0", "0"})["borcea_voisin"]["availability"] == "NotAvailable");
}
