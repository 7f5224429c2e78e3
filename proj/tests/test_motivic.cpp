#include <random>

#include "doctest.h"
#include "nmotive/errors.hpp"
#include "nmotive/laurent.hpp"
#include "nmotive/motivic.hpp"
#include "nmotive/newton.hpp"
#include "nmotive/pipeline.hpp"

using namespace nmotive;

namespace {

struct CuspFaces {
  LaurentPolynomial f = parse("x^2+y^3").poly;
  std::vector<FaceData> faces = compact_faces(newton_polyhedron(f.support(), Cone::orthant(2)));
  const FaceData& vertex_x() const { return faces[0].vertices[0] == make_point({2, 0}) ? faces[0] : faces[1]; }
  const FaceData& edge() const { return faces[2]; }
};

AtomicClass one_atom(const LaurentPolynomial& g, const Int& m, const Int& chi) {
  AtomicClass a;
  a.kind = AtomKind::HypersurfaceOne;
  a.torus_rank = g.rank;
  a.poly = g;
  a.poly.add_term(zero_point(g.rank), Rat(-1));
  a.m = m;
  a.chi = chi;
  return a;
}

LaurentPolynomial substitute(const LaurentPolynomial& g, const IntMatrix& a) {
  LaurentPolynomial out(g.rank);
  for (const auto& [u, c] : g.terms) {
    LatticePoint v = zero_point(g.rank);
    for (std::size_t i = 0; i < g.rank; ++i)
      for (std::size_t j = 0; j < g.rank; ++j) v[i] += a[i][j] * u[j];
    out.add_term(v, c);
  }
  return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix a(n, LatticePoint(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> k(-2, 2);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const long t = k(rng);
    for (std::size_t c = 0; c < n; ++c) a[i][c] += t * a[j][c];
  }
  return a;
}

long cross(std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Pick oracle for a curve in T^2 with full-dimensional Newton polygon P:
// chi = 2 - 2g - b with g interior and b boundary lattice points, by brute
// force over the bounding box.
long pick_euler(const std::vector<std::pair<long, long>>& s) {
  long x0 = s[0].first, x1 = x0, y0 = s[0].second, y1 = y0;
  for (auto [x, y] : s) {
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  auto in_triangle = [](auto p, auto a, auto b, auto c) {
    long d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
    bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(neg && pos);
  };
  auto on_boundary = [&](std::pair<long, long> p) {
    for (auto a : s)
      for (auto b : s) {
        if (a == b || cross(a, b, p) != 0) continue;
        if (std::min(a.first, b.first) > p.first || std::max(a.first, b.first) < p.first) continue;
        if (std::min(a.second, b.second) > p.second || std::max(a.second, b.second) < p.second) continue;
        bool one_side = true;
        for (auto q : s) one_side = one_side && cross(a, b, q) >= 0;
        if (one_side) return true;
      }
    return false;
  };
  long interior = 0, boundary = 0;
  for (long x = x0; x <= x1; ++x)
    for (long y = y0; y <= y1; ++y) {
      std::pair<long, long> p{x, y};
      bool inside = false;
      for (std::size_t i = 0; i < s.size() && !inside; ++i)
        for (std::size_t j = i + 1; j < s.size() && !inside; ++j)
          for (std::size_t k = j + 1; k < s.size() && !inside; ++k)
            inside = cross(s[i], s[j], s[k]) != 0 && in_triangle(p, s[i], s[j], s[k]);
      if (!inside) continue;
      if (on_boundary(p)) ++boundary; else ++interior;
    }
  return 2 - 2 * interior - boundary;
}

}  // namespace

TEST_CASE("lpoly arithmetic") {
  CHECK(lpoly_one_minus_l(0) == lpoly_constant(1));
  CHECK(lpoly_one_minus_l(2) == LPoly{{0, 1}, {1, -2}, {2, 1}});
  CHECK(lpoly_at_one(lpoly_one_minus_l(3)) == 0);
  CHECK(lpoly_add(lpoly_constant(2), lpoly_constant(-2)).empty());
  auto [k, rest] = lpoly_split_one_minus_l(lpoly_mul(lpoly_one_minus_l(2), LPoly{{0, 3}, {1, 1}}));
  CHECK(k == 2);
  CHECK(rest == LPoly{{0, 3}, {1, 1}});
}

TEST_CASE("atom_one on the cusp and on a smooth germ") {
  CuspFaces cusp;
  auto v = atom_one(cusp.vertex_x(), restrict_to_face(cusp.f, cusp.vertex_x()));
  CHECK(v.kind == AtomKind::HypersurfaceOne);
  CHECK(v.torus_rank == 1);
  CHECK(v.m == 2);
  CHECK(v.chi == 2);
  CHECK(euler_from_volume(v) == 2);

  auto e = atom_one(cusp.edge(), restrict_to_face(cusp.f, cusp.edge()));
  CHECK(e.torus_rank == 2);
  CHECK(e.m == 6);
  CHECK(e.chi == -6);
  CHECK(euler_from_volume(e) == -6);

  auto x = parse("x").poly;
  auto xf = compact_faces(newton_polyhedron(x.support(), Cone::orthant(1)));
  REQUIRE(xf.size() == 1);
  auto p = atom_one(xf[0], x);
  CHECK(p.kind == AtomKind::Point);
  CHECK(p.m == 1);
  CHECK(p.chi == 1);
}

TEST_CASE("atom_zero") {
  CuspFaces cusp;
  CHECK_FALSE(atom_zero(cusp.vertex_x(), restrict_to_face(cusp.f, cusp.vertex_x())).first);
  auto [present, z] = atom_zero(cusp.edge(), restrict_to_face(cusp.f, cusp.edge()));
  REQUIRE(present);
  CHECK(z.kind == AtomKind::HypersurfaceZero);
  CHECK(z.torus_rank == 1);
  CHECK(z.chi == 1);

  auto g = parse("x^2+y^2").poly;
  auto faces = compact_faces(newton_polyhedron(g.support(), Cone::orthant(2)));
  auto [p2, z2] = atom_zero(faces.back(), restrict_to_face(g, faces.back()));
  REQUIRE(p2);
  CHECK(z2.chi == 2);
  CHECK(euler_from_volume(z2) == 2);
}

TEST_CASE("euler and zeta specialization") {
  CuspFaces cusp;
  auto psi = motivic_milnor_fibre(GermInput::orthant(cusp.f)).psi;
  CHECK(psi.terms.size() == 4);
  CHECK(euler_specialize(psi) == -1);
  CHECK(zeta_specialize(psi) == ZetaFunction{{{6, 1}, {2, -1}, {3, -1}}});

  CHECK(euler_specialize(MotivicElement{}) == 0);
  CHECK(zeta_specialize(MotivicElement{}).factors.empty());
  MotivicElement killed = lpoly_one_minus_l(1) * psi;
  CHECK(euler_specialize(killed) == 0);
  CHECK(zeta_specialize(killed).factors.empty());

  MotivicElement pt;
  pt.add(lpoly_constant(1), AtomicClass{});
  CHECK(zeta_specialize(pt) == ZetaFunction{{{1, -1}}});
}

TEST_CASE("zeta_atom requires m | chi") {
  auto a = one_atom(parse("x^2").poly, 3, 2);
  CHECK_THROWS_AS(zeta_atom(a), ActionOrderError);
}

TEST_CASE("canonicalize merges, cancels and is idempotent") {
  auto a = one_atom(parse("x^2+y^3").poly, 6, -6);
  MotivicElement e;
  e.add(lpoly_constant(1), a);
  e.add(lpoly_constant(1), a);
  auto c = canonicalize(e);
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].coeff == lpoly_constant(2));

  MotivicElement l;
  l.add(LPoly{{1, 1}}, a);
  CHECK(canonicalize(l - l).terms.empty());

  auto again = canonicalize(c);
  CHECK(again.terms.size() == c.terms.size());
  CHECK(again == c);
}

TEST_CASE("fingerprint is invariant under unimodular substitution") {
  auto g = parse("x^2+y^3").poly;
  // (x, y) -> (x y^2, y): exponent (a, b) -> (a, 2a + b).
  IntMatrix s{make_point({1, 0}), make_point({2, 1})};
  CHECK(fingerprint(one_atom(g, 6, -6)) == fingerprint(one_atom(substitute(g, s), 6, -6)));
  CHECK(fingerprint(one_atom(g, 6, -6)) != fingerprint(one_atom(parse("x^2+y^4").poly, 6, -6)));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> e(0, 4), c(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    LaurentPolynomial h(n);
    for (int t = 0; t < 4; ++t) {
      LatticePoint u(n);
      for (auto& x : u) x = e(rng);
      if (!is_zero(u)) h.add_term(u, c(rng));
    }
    if (h.terms.empty()) continue;
    auto sub = substitute(h, random_unimodular(rng, n));
    CHECK(fingerprint(one_atom(h, 1, 0)) == fingerprint(one_atom(sub, 1, 0)));

    // Zero-type atoms are also invariant under monomial shifts.
    AtomicClass z;
    z.kind = AtomKind::HypersurfaceZero;
    z.torus_rank = n;
    z.poly = h;
    AtomicClass zs = z;
    zs.poly = LaurentPolynomial(n);
    LatticePoint shift(n);
    for (auto& x : shift) x = e(rng) - 2;
    for (const auto& [u, k] : sub.terms) zs.poly.add_term(add(u, shift), k);
    CHECK(fingerprint(z) == fingerprint(zs));
  }
}

TEST_CASE("BKK euler agrees with the Pick oracle on random curves") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(0, 5);
  int checked = 0;
  while (checked < 60) {
    std::vector<std::pair<long, long>> pts{{0, 0}};
    LaurentPolynomial g(2);
    for (int t = 0; t < 3; ++t) {
      long a = e(rng), b = e(rng);
      if (a == 0 && b == 0) continue;
      pts.push_back({a, b});
      g.add_term(make_point({a, b}), 1);
    }
    auto atom = one_atom(g, 1, 0);
    if (affine_dimension(atom.poly.support()) < 2) continue;
    CHECK(euler_from_volume(atom) == pick_euler(pts));
    ++checked;
  }
}

TEST_CASE("degree identity: deg zeta = -chi") {
  for (const char* text : {"x^2+y^3", "x^3+y^5", "x*y+x^3+y^3", "x^2+y^2+z^2", "x^3+y^3+z^3", "x^2+y^3+z^4+x*y*z"}) {
    auto psi = motivic_milnor_fibre(GermInput::orthant(parse(text).poly)).psi;
    CHECK(zeta_specialize(psi).degree() == -euler_specialize(psi));
    for (const auto& t : psi.terms) {
      CHECK(t.atom.chi % t.atom.m == 0);
      CHECK(euler_from_volume(t.atom) == t.atom.chi);
    }
  }
}
