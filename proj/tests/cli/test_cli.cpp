#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "levikit/cli.hpp"
#include "levikit/io.hpp"
#include "levikit/cohomology.hpp"

using namespace levikit;
namespace fs = std::filesystem;

namespace {

const fs::path fixtures = LEVIKIT_FIXTURE_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result levikit_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return (fixtures / name).string(); }

io::Json structured(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("structured");
  Result r = levikit_run(args);
  return io::Json::parse(r.out);
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "levikit_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("decompose the S3-graded block algebra") {
  Result r = levikit_run({"decompose", fx("s3_block.alg"), "--grading", fx("s3.grading"), "--format", "structured"});
  REQUIRE(r.code == 0);
  io::Json j = io::Json::parse(r.out);
  CHECK(j["B"].size() == 6);
  CHECK(j["R"].size() == 2);
  CHECK(j["N"] == j["R"]);
  CHECK(j["S"].empty());
  CHECK(j["components"].size() == 2);
  for (const auto& c : j["report"]) CHECK(c["pass"] == true);

  // every B row lies in a single degree of the grading
  Grading g = io::grading_from_json(io::read_json(fx("s3.grading")));
  for (const auto& row : j["B"]) {
    Vector v = io::vector_from_json(row, 8);
    CHECK(homogeneous_degree(g, v).has_value());
  }
}

TEST_CASE("hypothesis failures exit with 2") {
  Result levi = levikit_run({"levi", fx("l6.alg"), "--module", fx("sweedler_action.act"), "--hopf", fx("h4.hopf")});
  CHECK(levi.code == 2);
  CHECK(levi.err.find("RadicalNotInvariant") != std::string::npos);

  io::Json j = structured({"integral", fx("h4.hopf")});
  CHECK(j["error"] == "NormalizationImpossible");
  CHECK(j["indices"] == io::Json::array({1}));
  CHECK(j["exit_code"] == 2);

  CHECK(levikit_run({"levi", fx("hnoninv.alg"), "--automorphism", fx("hnoninv.aut")}).code == 2);
}

TEST_CASE("radical stability under the Sweedler action") {
  io::Json j = structured({"radical", fx("l6.alg"), "--module", fx("sweedler_action.act"), "--hopf", fx("h4.hopf")});
  CHECK(j["dim"] == 3);
  CHECK(j["stability"]["R_invariant"] == false);
  CHECK(j["stability"]["theorem_applies"] == false);
  io::Json v = structured({"validate", fx("l6.alg"), "--module", fx("sweedler_action.act"), "--hopf", fx("h4.hopf")});
  CHECK(v["valid"] == true);
}

TEST_CASE("integrals") {
  io::Json j = structured({"integral", fx("s3.hopf")});
  CHECK(j["integral"] == io::Json::array({"1", "0", "0", "0", "0", "0"}));
  CHECK(j["normalized"] == true);
  CHECK(j["ad_invariant"] == true);
  io::Json d = structured({"integral", fx("s3.hopf"), "--dual"});
  CHECK(d["integral"] == io::Json::array({"1/6", "1/6", "1/6", "1/6", "1/6", "1/6"}));
  CHECK(structured({"integral", fx("h4.hopf"), "--dual"})["exit_code"] == 2);
}

TEST_CASE("obstruction certificates") {
  io::Json j = structured({"obstruction", fx("hnoninv.alg"), "--automorphism", fx("hnoninv.aut")});
  CHECK(j["certificate"] == true);
  CHECK(j["fixed"] == j["R"]);
  CHECK(j["image_in_R"] == true);
  CHECK(structured({"obstruction", fx("gl2.alg"), "--automorphism", fx("gl2_identity.aut")})["certificate"] == false);
  CHECK(structured({"obstruction", fx("sl2_pair_swap.alg"), "--automorphism", fx("sl2_pair_swap.aut")})["certificate"] ==
        false);
}

TEST_CASE("split, weyl and levi commands") {
  CHECK(structured({"split", fx("sl2_pair_swap.alg")})["count"] == 2);
  CHECK(structured({"split", fx("sl2_pair_swap.alg"), "--grading", fx("swap.grading")})["count"] == 1);
  CHECK(levikit_run({"split", fx("gl2.alg")}).code == 1);

  io::Json w = structured({"weyl", fx("sl2.alg"), "--rep", fx("sl2_natural.rep")});
  REQUIRE(w["count"] == 1);
  CHECK(w["components"][0].size() == 2);
  CHECK(structured({"weyl", fx("sl2_pair_swap.alg"), "--grading", fx("swap.grading")})["count"] == 1);
  CHECK(structured({"weyl", fx("sl2_pair_swap.alg")})["count"] == 2);

  io::Json l = structured({"levi", fx("gl2.alg")});
  CHECK(l["dim_B"] == 3);
  CHECK(l["R"] == io::Json::array({io::Json::array({"1", "0", "0", "1"})}));

  io::Json d = structured({"decompose", fx("l7.alg")});
  CHECK(d["S"] == io::Json::array({io::Json::array({"0", "0", "0", "1", "0", "0"})}));
  CHECK(d["N"].size() == 2);
}

TEST_CASE("cohomology solve") {
  io::Json j = structured({"cohomology", "solve", fx("sl2.alg"), "--cochain", fx("sl2_bracket.cochain")});
  REQUIRE(j.contains("omega"));
  CHECK(j["colinear"] == false);
  LieAlgebra s = io::algebra_from_json(io::read_json(fx("sl2.alg")));
  Matrix omega = io::matrix_from_json(j["omega"], 3, 3);
  std::vector<Matrix> ad;
  for (size_t i = 0; i < 3; ++i) ad.push_back(s.ad_basis(i));
  CHECK(coboundary(s, ad, omega) == bracket_cochain(s));

  io::Json g = structured({"cohomology", "solve", fx("sl2_pair_swap.alg"), "--grading", fx("swap.grading"), "--cochain",
                           fx("sl2_pair_bracket.cochain")});
  REQUIRE(g.contains("omega"));
  CHECK(g["colinear"] == true);
  Grading grading = io::grading_from_json(io::read_json(fx("swap.grading")));
  CHECK(is_colinear_cochain(io::matrix_from_json(g["omega"], 6, 6), grading, grading));
}

TEST_CASE("Hopf builders match the fixtures") {
  CHECK(levikit_run({"hopf", "build", "sweedler4", "--format", "structured"}).out == slurp(fixtures / "h4.hopf"));
  CHECK(levikit_run({"hopf", "build", "group", "--table", fx("s3.group"), "--format", "structured"}).out ==
        slurp(fixtures / "s3.hopf"));
  fs::path dual = scratch("h4_dual.hopf"), back = scratch("h4_dual_dual.hopf");
  REQUIRE(levikit_run({"hopf", "dual", fx("h4.hopf"), "--format", "structured", "--output", dual.string()}).code == 0);
  REQUIRE(levikit_run({"hopf", "dual", dual.string(), "--format", "structured", "--output", back.string()}).code == 0);
  CHECK(same_hopf(io::hopf_from_json(io::read_json(back)), sweedler4()));
  CHECK(levikit_run({"validate", "--hopf", dual.string()}).code == 0);
}

TEST_CASE("decompositions round-trip through validate") {
  fs::path out = scratch("s3.dec");
  std::vector<std::string> args = {"decompose", fx("s3_block.alg"), "--grading", fx("s3.grading"), "--format", "structured"};
  Result first = levikit_run(args);
  args.insert(args.end(), {"--output", out.string()});
  REQUIRE(levikit_run(args).code == 0);
  CHECK(slurp(out) == first.out);
  CHECK(levikit_run({"decompose", fx("s3_block.alg"), "--grading", fx("s3.grading"), "--format", "structured"}).out ==
        first.out);

  Result ok = levikit_run({"validate", fx("s3_block.alg"), "--grading", fx("s3.grading"), "--decomposition", out.string()});
  CHECK(ok.code == 0);

  // move a B row off its degree
  io::Json d = io::Json::parse(first.out);
  d["B"][1] = io::Json::array({"0", "1", "0", "0", "1", "0", "0", "0"});
  fs::path tampered = scratch("s3_tampered.dec");
  io::write_text(tampered, io::dump(d));
  io::Json report =
      structured({"validate", fx("s3_block.alg"), "--grading", fx("s3.grading"), "--decomposition", tampered.string()});
  CHECK(report["valid"] == false);
  CHECK(levikit_run({"validate", fx("s3_block.alg"), "--grading", fx("s3.grading"), "--decomposition", tampered.string()})
            .code == 1);
}

TEST_CASE("input errors") {
  CHECK(levikit_run({"radical", fx("missing.alg")}).code == 3);
  CHECK(levikit_run({"radical"}).code == 3);
  CHECK(levikit_run({"frobnicate"}).code == 3);
  CHECK(levikit_run({"levi", fx("s3_block.alg"), "--grading", fx("s3.grading"), "--automorphism", fx("hnoninv.aut")}).code ==
        3);
  CHECK(levikit_run({"levi", fx("l6.alg"), "--module", fx("sweedler_action.act")}).code == 3);

  fs::path garbage = scratch("garbage.alg");
  io::write_text(garbage, "{ \"dim\": 2, ");
  CHECK(levikit_run({"radical", garbage.string()}).code == 3);
  io::write_text(garbage, "{\"dim\": 2, \"bracket\": [{\"i\": 0, \"j\": 1, \"c\": {\"0\": \"1/0\"}}]}");
  CHECK(levikit_run({"radical", garbage.string()}).code == 3);

  fs::path jacobi = scratch("jacobi.alg");
  io::write_text(jacobi, R"({"dim": 3, "bracket": [{"i": 0, "j": 1, "c": {"1": "1"}}, {"i": 0, "j": 2, "c": {"2": "1"}},
                             {"i": 1, "j": 2, "c": {"0": "1"}}]})");
  io::Json e = structured({"radical", jacobi.string()});
  CHECK(e["error"] == "JacobiViolation");
  CHECK(e["exit_code"] == 1);

  // the S3 grading read as a grading of the wrong algebra
  CHECK(levikit_run({"levi", fx("gl2.alg"), "--grading", fx("s3.grading")}).code == 1);
  CHECK(levikit_run({"--help"}).code == 0);
}

TEST_CASE("dimension cap") {
  setenv("LEVIKIT_MAX_DIM", "6", 1);
  io::Json j = structured({"radical", fx("s3_block.alg")});
  CHECK(j["error"] == "DimensionCap");
  CHECK(j["exit_code"] == 1);
  CHECK(levikit_run({"radical", fx("gl2.alg")}).code == 0);
  setenv("LEVIKIT_MAX_DIM", "six", 1);
  CHECK(levikit_run({"radical", fx("gl2.alg")}).code == 3);
  unsetenv("LEVIKIT_MAX_DIM");
}
