#include <random>

#include "doctest.h"
#include "nmotive/laurent.hpp"
#include "nmotive/newton.hpp"
#include "nmotive/nondegeneracy.hpp"

using namespace nmotive;

namespace {

NondegeneracyVerdict verdict(const std::string& text, const std::vector<long>& primes = default_primes()) {
  auto f = parse(text).poly;
  auto faces = compact_faces(newton_polyhedron(f.support(), Cone::orthant(f.rank)));
  return nondegeneracy_check(f, faces, primes);
}

}  // namespace

TEST_CASE("cusp is exactly nondegenerate on every face") {
  auto v = verdict("x^2+y^3");
  CHECK(v.faces.size() == 3);
  CHECK(v.all_exact());
  CHECK(v.first_degenerate() == nullptr);
}

TEST_CASE("(x+y)^2 has a degenerate edge with a verifiable witness") {
  auto f = parse("x^2+2*x*y+y^2").poly;
  auto v = verdict("x^2+2*x*y+y^2");
  const FaceVerdict* bad = v.first_degenerate();
  REQUIRE(bad != nullptr);
  CHECK(bad->dim == 1);
  CHECK(bad->status == FaceStatus::ProvenDegenerate);
  REQUIRE(bad->witness.size() == 2);
  CHECK(bad->witness[0] == -bad->witness[1]);
  CHECK(verify_witness(f, bad->witness));
}

TEST_CASE("repeated irrational root is degenerate with a certificate") {
  // (x^2 - 2y^2)^2: the edge polynomial (s - 2)^2 in s = x^2/y^2 has a
  // rational root but x/y = sqrt 2 does not.
  auto v = verdict("x^4-4*x^2*y^2+4*y^4");
  const FaceVerdict* bad = v.first_degenerate();
  REQUIRE(bad != nullptr);
  CHECK(bad->status == FaceStatus::ProvenDegenerate);
  CHECK_FALSE(bad->certificate.empty());
  if (!bad->witness.empty()) CHECK(verify_witness(parse("x^4-4*x^2*y^2+4*y^4").poly, bad->witness));
}

TEST_CASE("Fermat quadric: the 2-face is only likely nondegenerate") {
  auto v = verdict("x^2+y^2+z^2", {5, 7, 11});
  REQUIRE_FALSE(v.faces.empty());
  const auto& top = v.faces.back();
  CHECK(top.dim == 2);
  CHECK(top.status == FaceStatus::LikelyNondegenerate);
  CHECK(top.primes_tested == std::vector<long>{5, 7, 11});
  CHECK_FALSE(v.has(FaceStatus::ProvenDegenerate));
}

TEST_CASE("degenerate 2-face is caught by the finite-field scan") {
  // (x + y + z)^2 vanishes with its gradient on x + y + z = 0.
  auto f = parse("x^2+y^2+z^2+2*x*y+2*y*z+2*x*z").poly;
  auto v = verdict("x^2+y^2+z^2+2*x*y+2*y*z+2*x*z");
  const FaceVerdict* bad = v.first_degenerate();
  REQUIRE(bad != nullptr);
  CHECK(bad->status == FaceStatus::ProvenDegenerate);
  auto faces = compact_faces(newton_polyhedron(f.support(), Cone::orthant(3)));
  const FaceData* face = nullptr;
  for (const auto& fd : faces) {
    if (fd.vertices == bad->face) face = &fd;
  }
  REQUIRE(face != nullptr);
  CHECK(verify_witness(restrict_to_face(f, *face), bad->witness));
}

TEST_CASE("vertices are always exact") {
  auto f = parse("7*x^3*y^2").poly;
  auto r = check_face(f, {make_point({3, 2})}, default_primes());
  CHECK(r.status == FaceStatus::ExactNondegenerate);
}

TEST_CASE("verdicts do not depend on the number of jobs") {
  auto f = parse("x^3+y^3+z^3+x*y*z").poly;
  auto faces = compact_faces(newton_polyhedron(f.support(), Cone::orthant(3)));
  auto a = nondegeneracy_check(f, faces, default_primes(), 1);
  auto b = nondegeneracy_check(f, faces, default_primes(), 4);
  REQUIRE(a.faces.size() == b.faces.size());
  for (std::size_t i = 0; i < a.faces.size(); ++i) {
    CHECK(a.faces[i].status == b.faces[i].status);
    CHECK(a.faces[i].witness == b.faces[i].witness);
  }
}

TEST_CASE("property: random binomial edges are nondegenerate, squared edges are not") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> exp(1, 5), coef(1, 9);
  for (int trial = 0; trial < 40; ++trial) {
    long a = exp(rng), b = exp(rng);
    LaurentPolynomial f(2);
    f.add_term(make_point({a, 0}), coef(rng));
    f.add_term(make_point({0, b}), coef(rng));
    CHECK(check_face(f, {make_point({0, b}), make_point({a, 0})}, default_primes()).status ==
          FaceStatus::ExactNondegenerate);

    // (x^a - c y^b)^2 with c a rational square root target.
    long c = coef(rng);
    LaurentPolynomial g(2);
    g.add_term(make_point({2 * a, 0}), 1);
    g.add_term(make_point({a, b}), -2 * c);
    g.add_term(make_point({0, 2 * b}), c * c);
    auto r = check_face(g, {make_point({0, 2 * b}), make_point({2 * a, 0})}, default_primes());
    CHECK(r.status == FaceStatus::ProvenDegenerate);
    if (!r.witness.empty()) CHECK(verify_witness(g, r.witness));
  }
}
