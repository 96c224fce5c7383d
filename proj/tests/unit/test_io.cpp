#include "doctest.h"
#include "levikit/catalog.hpp"
#include "levikit/error.hpp"
#include "levikit/io.hpp"
#include "levikit/cohomology.hpp"

using namespace levikit;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("documents round-trip") {
  for (const auto& l : {catalog::s3_block(), catalog::l7(), catalog::hnoninv(), LieAlgebra::abelian(2)}) {
    LieAlgebra back = io::algebra_from_json(io::Json::parse(io::dump(io::algebra_to_json(l))));
    CHECK(back.constants() == l.constants());
    CHECK(back.labels() == l.labels());
  }
  HopfAlgebra h = sweedler4();
  CHECK(same_hopf(io::hopf_from_json(io::hopf_to_json(h)), h));
  CHECK(io::hopf_from_json(io::hopf_to_json(h)).labels() == h.labels());

  Grading g = catalog::s3_block_grading();
  Grading gb = io::grading_from_json(io::grading_to_json(g));
  CHECK(*gb.group == *g.group);
  CHECK(gb.degrees == g.degrees);
  auto z = std::make_shared<const GroupBackend>(GroupBackend::free_abelian(2));
  Grading zg{z, {{1, -2}, {0, 0}}};
  CHECK(io::grading_from_json(io::grading_to_json(zg)).degrees == zg.degrees);

  ModuleStructure a = catalog::sweedler_action_l6();
  CHECK(io::module_from_json(io::module_to_json(a), a.hopf).act == a.act);
  ComoduleStructure c = grading_to_comodule(g);
  CHECK(io::comodule_from_json(io::comodule_to_json(c), c.hopf).rho == c.rho);

  Cochain phi = bracket_cochain(catalog::sl2());
  CHECK(io::cochain_from_json(io::cochain_to_json(phi)) == phi);
  CyclicAction phi_aut = catalog::hnoninv_automorphism();
  CHECK(io::automorphism_from_json(io::automorphism_to_json(phi_aut)).phi == phi_aut.phi);
}

TEST_CASE("rationals in documents") {
  CHECK(io::rational_to_json(fraction(-6, 4)) == "-3/2");
  CHECK(io::rational_to_json(Rational(5)) == "5");
  CHECK(io::rational_from_json(io::Json("4/6")) == fraction(2, 3));
  CHECK(io::rational_from_json(io::Json(-7)) == Rational(-7));
  CHECK(kind_of([] { io::rational_from_json(io::Json(0.5)); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::rational_from_json(io::Json("1/0")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::rational_from_json(io::Json("x")); }) == ErrorKind::Parse);
}

TEST_CASE("malformed documents") {
  using J = io::Json;
  CHECK(kind_of([] { io::algebra_from_json(J::parse(R"({"bracket": []})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::algebra_from_json(J::parse(R"({"dim": 2, "bracket": [{"i": 1, "j": 0, "c": {}}]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { io::algebra_from_json(J::parse(R"({"dim": 2, "bracket": [{"i": 0, "j": 1, "c": {"2": "1"}}]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { io::algebra_from_json(J::parse(R"({"dim": 2, "bracket": [{"i": 0, "j": 1, "c": {"a": "1"}}]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { io::grading_from_json(J::parse(R"({"group": {"kind": "lattice"}, "degrees": []})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] {
          io::grading_from_json(J::parse(R"({"group": {"kind": "free_abelian", "rank": 1}, "degrees": [[1, 2]]})"));
        }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::read_json("/nonexistent/levikit.alg"); }) == ErrorKind::Io);
  // a well-formed document describing a non-Lie bracket is a validation error, not a parse error
  CHECK(kind_of([] {
          io::algebra_from_json(J::parse(
              R"({"dim": 3, "bracket": [{"i": 0, "j": 1, "c": {"1": 1}}, {"i": 0, "j": 2, "c": {"2": 1}}, {"i": 1, "j": 2, "c": {"0": 1}}]})"));
        }) == ErrorKind::JacobiViolation);
}
