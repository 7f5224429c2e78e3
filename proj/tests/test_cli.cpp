#include <sstream>

#include "doctest.h"
#include "nmotive/cli.hpp"
#include "nmotive/serialize.hpp"

using namespace nmotive;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("serialization round-trips") {
  auto g = GermInput::orthant(parse("x^2+y^3").poly);
  auto mf = motivic_milnor_fibre(g);
  CHECK(motivic_element_from_json(element_json(mf.psi)) == mf.psi);
  CHECK(element_json(motivic_element_from_json(element_json(mf.psi))) == element_json(mf.psi));

  auto z = monodromy_zeta(g);
  CHECK(zeta_from_json(zeta_json(z)) == z);

  auto f = parse("3*x*y^-1 - 1/2").poly;
  CHECK(poly_from_json(poly_json(f), 2) == f);

  Int big("123456789012345678901234567890");
  CHECK(int_json(big).is_string());
  CHECK(int_from_json(int_json(big)) == big);
  CHECK(int_json(Int(-7)).is_number_integer());
  CHECK(int_from_json(int_json(Int(-7))) == -7);
}

TEST_CASE("text renderings") {
  CHECK(zeta_text(ZetaFunction{}) == "1");
  CHECK(zeta_text(ZetaFunction{{{2, -1}, {3, -1}, {6, 1}}}) == "(1-t^6) * (1-t^2)^-1 * (1-t^3)^-1");
  CHECK(zeta_text(ZetaFunction{{{1, 2}}}) == "(1-t)^2");
  CHECK(lpoly_text(lpoly_constant(1)) == "1");
}

TEST_CASE("cli: cusp") {
  auto r = invoke({"zeta", "--poly", "x^2+y^3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1-t^6) * (1-t^2)^-1 * (1-t^3)^-1\n");

  r = invoke({"milnor", "--poly", "x^2+y^3", "--format", "text"});
  CHECK(r.out == "2\n");
  r = invoke({"euler", "--poly", "x^2+y^3", "--format", "text"});
  CHECK(r.out == "-1\n");
  r = invoke({"oracle-mu", "--poly", "x^2+y^3", "--format", "text"});
  CHECK(r.out == "2\n");

  r = invoke({"analyze", "--poly", "x^2+y^3"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "analyze");
  CHECK(j["variables"] == Json{"x", "y"});
  CHECK(j["milnor"] == 2);
  CHECK(j["euler"] == -1);
  CHECK(j["zeta"] == zeta_json(ZetaFunction{{{2, -1}, {3, -1}, {6, 1}}}));
  CHECK(j["oracles"]["match"] == true);
  CHECK(j["psi_local"].size() == 4);
}

TEST_CASE("cli: stdin, files and variables") {
  auto r = invoke({"milnor", "--poly", "-", "--format", "text"}, "x^3 + y^4\n");
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");

  r = invoke({"milnor", "--poly", "a^2+b^2+c^2", "--vars", "a,b,c", "--format", "text"});
  CHECK(r.out == "1\n");

  r = invoke({"milnor", "--poly-file", "/nonexistent/poly.txt"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: polynomial as JSON terms") {
  const std::string terms = R"([{"coeff": "1", "exponents": [2, 0]}, {"coeff": "1", "exponents": [0, 3]}])";
  auto r = invoke({"zeta", "--poly", terms, "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1-t^6) * (1-t^2)^-1 * (1-t^3)^-1\n");
  r = invoke({"milnor", "--poly", "-", "--vars", "a,b"}, terms);
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["variables"] == Json{"a", "b"});

  CHECK(invoke({"milnor", "--poly", R"([{"coeff": "1/0", "exponents": [2]}])"}).code == 2);
  CHECK(invoke({"milnor", "--poly", R"([{"coeff": "x", "exponents": [2]}])"}).code == 2);
  CHECK(invoke({"milnor", "--poly", R"([{"coeff": "1", "exponents": [2]}, {"coeff": "1", "exponents": [0, 3]}])"}).code == 2);
  CHECK(invoke({"milnor", "--poly", R"([{"exponents": [2]}])"}).code == 2);
  CHECK(invoke({"milnor", "--poly", "x^2+y^3/0"}).code == 2);
}

TEST_CASE("cli: motivic JSON re-parses to the same element") {
  auto r = invoke({"motivic", "--poly", "x*y+x^3+y^3"});
  REQUIRE(r.code == 0);
  auto psi = motivic_milnor_fibre(GermInput::orthant(parse("x*y+x^3+y^3").poly)).psi;
  CHECK(motivic_element_from_json(Json::parse(r.out)["psi_local"]) == psi);
}

TEST_CASE("cli: non-orthant cone") {
  auto r = invoke({"analyze", "--poly", "x^2+x^3*y^6", "--cone", "[[1,0],[1,2]]"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["cone"] == Json{{1, 0}, {1, 2}});
  CHECK(j["oracles"]["match"] == true);

  CHECK(invoke({"milnor", "--poly", "x^2+y^3", "--cone", "[[1,0],[-1,0]]"}).code == 2);
  CHECK(invoke({"milnor", "--poly", "x^2+y^3", "--cone", "[[1,0,0]]"}).code == 2);
  CHECK(invoke({"milnor", "--poly", "x^2+y^3", "--cone", "not json"}).code == 2);
  CHECK(invoke({"oracle-mu", "--poly", "x^2+x^3*y^6", "--cone", "[[1,0],[1,2]]"}).code == 3);
}

TEST_CASE("cli: exit codes") {
  auto r = invoke({"milnor", "--poly", "x^2y + xy^2"});
  CHECK(r.code == 3);
  auto j = Json::parse(r.out);
  CHECK(j["error"]["kind"] == "NotConvenient");
  CHECK(j["error"]["missing_rays"] == Json{{0, 1}, {1, 0}});

  CHECK(invoke({"milnor", "--poly", "x^2+"}).code == 2);
  CHECK(invoke({"milnor", "--poly", "x^2+q", "--vars", "x,y"}).code == 2);
  CHECK(invoke({"milnor"}).code == 2);
  CHECK(invoke({"frobnicate", "--poly", "x"}).code == 2);
  CHECK(invoke({"milnor", "--poly", "x^2+y^3", "--primes", "4"}).code == 2);
  CHECK(invoke({"milnor", "--poly", "x^2+y^3", "--format", "xml"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);

  CHECK(invoke({"analyze", "--poly", "x^2+2*x*y+y^2"}).code == 3);
  CHECK(invoke({"milnor", "--poly", "x^2+y^2+z^2", "--strict"}).code == 3);
  CHECK(invoke({"milnor", "--poly", "x^2+y^2+z^2", "--primes", "5,7,11"}).code == 0);
  CHECK(invoke({"wh", "--poly", "x^2+y^3+x*y"}).code == 3);
}

TEST_CASE("cli: check-ndg reports without failing") {
  auto r = invoke({"check-ndg", "--poly", "x^2+2*x*y+y^2"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  bool found = false;
  for (const auto& f : j["nondegeneracy"]) found = found || f["status"] == "ProvenDegenerate";
  CHECK(found);
}

TEST_CASE("cli: wh and fan-check") {
  auto r = invoke({"wh", "--poly", "x^2+y^3"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["euler_local"] == -1);
  CHECK(j["weights"]["e"] == 6);

  r = invoke({"fan-check", "--poly", "x*y+x^3+y^3"});
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["refinement_euler_check"] == true);
  CHECK(j["rays"].size() == 4);
  CHECK(j["maximal_cones"].size() == 3);

  r = invoke({"fan-check", "--fuzz", "10", "--seed", "4", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "fan-check: 10/10 passed (seed 4)\n");
}

TEST_CASE("cli: repeated runs are byte-identical") {
  for (const char* text : {"x^2+y^3", "x^3+y^3+z^3+x*y*z", "x^2+2*x*y+y^2"}) {
    const std::vector<std::string> args{"analyze", "--poly", text, "--jobs", "3"};
    auto a = invoke(args);
    auto b = invoke(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
