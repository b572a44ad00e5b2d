#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/dispatch.hpp"
#include "cli/matrix_file.hpp"
#include "cli/scenario_file.hpp"
#include "examples.hpp"
#include "schurbound/schurbound.hpp"

using namespace schurbound;
using namespace schurbound::cli;
using nlohmann::json;

namespace {

std::string fixture(const char* name) { return std::string(SCHURBOUND_FIXTURES_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_parse_error(const std::string& text, int line, int column) {
  try {
    parse_matrix_text(text);
    FAIL("expected ParseError for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("parse real and complex matrices") {
  CHECK(parse_matrix_text("n 2 2 real\n1 0\n0 1\n") == Matrix::identity(2));
  const Matrix c = parse_matrix_text("n 1 2 complex\n0,1 2.5\n");
  CHECK(c(0, 0) == Complex(0, 1));
  CHECK(c(0, 1) == Complex(2.5, 0));
  const Matrix commented = parse_matrix_text("# header next\n\nn 1 1 real\n% value\n-3e-2\n");
  CHECK(commented(0, 0) == Complex(-0.03, 0));
}

TEST_CASE("fixtures parse to the printed values") {
  CHECK(parse_matrix(fixture("psd_pair_A.mtx")) == examples::psd_pair_a().matrix());
  CHECK(parse_matrix(fixture("psd_pair_B.mtx")) == examples::psd_pair_b().matrix());
  CHECK(parse_matrix(fixture("indefinite_C.mtx")) == examples::indefinite_c().matrix());
  CHECK(max_abs_diff(parse_matrix(fixture("projection_P.mtx")), examples::projection_p()) <= 1e-16);
}

TEST_CASE("parse errors carry locations") {
  expect_parse_error("m 2 2 real\n1 0\n0 1\n", 1, 1);
  expect_parse_error("n 2 2 quaternion\n1 0\n0 1\n", 1, 7);
  expect_parse_error("n 2 2 real\n1 0\n0\n", 3, 0);
  expect_parse_error("n 2 2 real\n1 0\n0 1 2\n", 3, 0);
  expect_parse_error("n 2 2 real\n1 x\n0 1\n", 2, 3);
  expect_parse_error("n 1 1 real\n0,1\n", 2, 1);
  expect_parse_error("n 2 2 real\n1 0\n", 2, 0);
  CHECK_THROWS_AS(parse_matrix("/nonexistent/file.mtx"), ParseError);
}

TEST_CASE("matrix round trip") {
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_gaussian_matrix(rng, 3, 4, t % 2 == 0);
    std::ostringstream out;
    write_matrix(out, m);
    const Matrix back = parse_matrix_text(out.str());
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(std::abs(back(i, j).real() - m(i, j).real()) <= 1e-15 * std::abs(m(i, j).real()));
        CHECK(std::abs(back(i, j).imag() - m(i, j).imag()) <= 1e-15 * std::abs(m(i, j).imag()));
      }
  }
}

TEST_CASE("scenario json round trip") {
  const json doa_doc = load_json(fixture("doa_coherent.json"));
  CHECK(scenario_kind(doa_doc) == ScenarioKind::Doa);
  const DoaScenario d = doa_scenario_from_json(doa_doc);
  CHECK(d.sensors == 4);
  CHECK(d.subarrays == 2);
  const DoaScenario d2 = doa_scenario_from_json(to_json(d));
  CHECK(d2.omega == d.omega);
  CHECK(d2.sigma_s == d.sigma_s);

  const json cp_doc = load_json(fixture("cp_rank_deficient.json"));
  CHECK(scenario_kind(cp_doc) == ScenarioKind::Cp);
  const CpScenario c = cp_scenario_from_json(cp_doc);
  const CpScenario c2 = cp_scenario_from_json(to_json(c));
  CHECK(c2.g == c.g);
  CHECK(c2.a_load == c.a_load);

  CHECK(matrix_from_json(json::parse(R"([[1, [0, 2]]])"), "<t>", "m")(0, 1) == Complex(0, 2));
  CHECK_THROWS(doa_scenario_from_json(json::parse(R"({"N": 4})")));
}

TEST_CASE("bound command on the 3x3 fixtures") {
  const Run r = invoke({"bound", "--a", fixture("psd_pair_A.mtx"), "--b", fixture("psd_pair_B.mtx")});
  CHECK(r.code == 0);
  const json doc = r.doc();
  CHECK(doc["command"] == "bound");
  CHECK(doc["exit_code"] == 0);
  CHECK(std::abs(doc["results"]["quantitative_bound"].get<double>() - 0.0655) <= 1e-4);
  CHECK(std::abs(doc["results"]["actual_lambda_min"].get<double>() - 0.438) <= 1e-3);
  CHECK(doc["results"]["nonsingularity"]["holds"] == true);
  CHECK(doc.contains("timing_ms"));
}

TEST_CASE("bound command with a zero diagonal entry") {
  const Run r = invoke({"bound", "--a", fixture("psd_pair_A.mtx"), "--b", fixture("psd_pair_B_zero_diag.mtx")});
  CHECK(r.code == 1);
  CHECK(r.doc()["results"]["reason"] == "min_diag is zero");
}

TEST_CASE("bound command with swapped roles is not verified") {
  const Run r = invoke({"bound", "--a", fixture("psd_pair_B.mtx"), "--b", fixture("psd_pair_A.mtx")});
  CHECK(r.code == 1);
}

TEST_CASE("mu, kappa, kruskal and classical commands") {
  const Run mu3 = invoke({"mu", "--a", fixture("psd_pair_A.mtx"), "--m", "3"});
  CHECK(mu3.code == 0);
  CHECK(std::abs(mu3.doc()["results"]["value"].get<double>()) <= 1e-12);

  const Run mu2 = invoke({"mu", "--a", fixture("psd_pair_A.mtx"), "--m", "2"});
  CHECK(std::abs(mu2.doc()["results"]["value"].get<double>() - (3 - std::sqrt(5.0)) / 2) <= 1e-12);

  const Run kappa = invoke({"kappa", "--b", fixture("psd_pair_B.mtx")});
  CHECK(kappa.code == 0);

  const Run kr = invoke({"kruskal", "--a", fixture("psd_pair_A.mtx")});
  CHECK(kr.code == 0);

  const Run cl = invoke({"classical", "--a", fixture("psd_pair_A.mtx"), "--b", fixture("psd_pair_B.mtx")});
  CHECK(cl.code == 0);
}

TEST_CASE("projection and certify-indefinite commands") {
  const Run p = invoke({"projection", "--c", fixture("indefinite_C.mtx"), "--p", fixture("projection_P.mtx")});
  CHECK(p.code == 0);
  const json res = p.doc()["results"];
  CHECK(res["hypothesis_holds"] == true);
  CHECK(res["conclusion_holds"] == true);

  const Run shift = invoke({"certify-indefinite", "--a", fixture("psd_pair_A.mtx"), "--b", fixture("psd_pair_B.mtx"), "--fraction", "1"});
  CHECK(shift.code == 0);

  const Run notproj = invoke({"projection", "--c", fixture("indefinite_C.mtx"), "--p", fixture("psd_pair_B.mtx")});
  CHECK(notproj.code == 2);
}

TEST_CASE("doa-bound and cp-bound commands") {
  const Run d = invoke({"doa-bound", "--scenario", fixture("doa_coherent.json")});
  CHECK(d.code == 0);
  const json res = d.doc()["results"];
  for (const char* key : {"r_sigma_s", "m", "tilde_sigma_sq", "kappa_eff", "min_diag", "bound", "lambda_min_smoothed"})
    CHECK_MESSAGE(res.contains(key), key);

  const Run c = invoke({"cp-bound", "--scenario", fixture("cp_rank_deficient.json")});
  CHECK(c.code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"bound", "--a", fixture("psd_pair_A.mtx")}).code == 2);
  CHECK(invoke({"bound", "--a", "/missing.mtx", "--b", fixture("psd_pair_B.mtx")}).code == 2);
  CHECK(invoke({"mu", "--a", fixture("psd_pair_A.mtx"), "--m", "7"}).code == 2);
  CHECK(invoke({"bound", "--bogus"}).code == 2);
}

TEST_CASE("non-PSD input exits 1") {
  CHECK(invoke({"bound", "--a", fixture("indefinite_C.mtx"), "--b", fixture("psd_pair_B.mtx")}).code == 1);
}

TEST_CASE("json output file") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "schurbound_test_report.json";
  std::filesystem::remove(path);
  const Run r = invoke({"mu", "--a", fixture("psd_pair_A.mtx"), "--m", "2", "--json", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const json doc = json::parse(in);
  CHECK(doc["command"] == "mu");
  std::filesystem::remove(path);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args = {"selftest", "--seed", "7"};
  const Run first = invoke(args);
  const Run second = invoke(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  const std::vector<std::string> bound = {"bound", "--a", fixture("psd_pair_A.mtx"), "--b", fixture("psd_pair_B.mtx"), "--seed", "7"};
  CHECK(invoke(bound).out == invoke(bound).out);
}

TEST_CASE("selftest reports per-suite counts") {
  const Run r = invoke({"selftest", "--seed", "42"});
  CHECK(r.code == 0);
  const json doc = r.doc();
  CHECK(doc["inputs"]["seed"] == 42);
  const json suites = doc["results"]["suites"];
  REQUIRE(suites.is_array());
  CHECK(suites.size() == 9);
  for (const json& s : suites) {
    CHECK(s["failed"] == 0);
    CHECK(s["passed"] == s["cases"]);
  }
}
