#include "nmotive/newton.hpp"

#include <algorithm>

#include "nmotive/errors.hpp"

namespace nmotive {

namespace {

void sort_unique(std::vector<LatticePoint>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const std::vector<LatticePoint>& support, const Cone& sigma_dual) {
  if (!sigma_dual.is_strictly_convex() || !sigma_dual.is_full_dimensional()) {
    throw ConeNotStrictlyConvex("sigma-dual must be strictly convex and full-dimensional");
  }
  NewtonPolyhedron np;
  np.recession = sigma_dual;
  np.support = support;
  sort_unique(np.support);
  if (np.support.empty()) throw DimensionMismatch("empty support");
  for (const auto& u : np.support) {
    if (u.size() != sigma_dual.ambient_rank()) throw DimensionMismatch(to_string(u) + " has the wrong rank");
  }
  for (const auto& s : np.support) {
    if (s.size() != sigma_dual.ambient_rank()) throw DimensionMismatch("support rank differs from cone rank");
    if (!sigma_dual.contains(s)) throw SupportOutsideCone(to_string(s) + " lies outside sigma-dual");
  }

  // Minimal elements for the order a <= b iff b - a in sigma-dual.
  std::vector<LatticePoint> minimal;
  for (const auto& s : np.support) {
    const bool dominated = std::any_of(np.support.begin(), np.support.end(), [&](const LatticePoint& t) {
      return t != s && sigma_dual.contains(sub(s, t));
    });
    if (!dominated) minimal.push_back(s);
  }

  std::vector<LatticePoint> points = minimal;
  for (const auto& s : minimal) {
    for (const auto& g : sigma_dual.generators()) np.shifted.push_back(add(s, g));
  }
  sort_unique(np.shifted);
  points.insert(points.end(), np.shifted.begin(), np.shifted.end());
  np.hull = convex_hull(points);

  for (const auto& v : np.hull.vertices()) {
    if (std::binary_search(np.support.begin(), np.support.end(), v)) np.vertices.push_back(v);
  }
  return np;
}

Cone smallest_containing_face(const Cone& sigma_dual, const std::vector<LatticePoint>& face) {
  LatticePoint q = zero_point(sigma_dual.ambient_rank());
  for (const auto& v : face) {
    if (!sigma_dual.contains(v)) throw FaceNotInCone(to_string(v) + " lies outside sigma-dual");
    q = add(q, v);
  }
  return sigma_dual.minimal_face_containing(q);
}

std::vector<FaceData> compact_faces(const NewtonPolyhedron& np) {
  const std::size_t n = np.recession.ambient_rank();
  if (std::binary_search(np.support.begin(), np.support.end(), zero_point(n))) {
    throw OriginInSupport("0 is in the support: the germ does not vanish at the fixed point");
  }
  const Polytope& hull = np.hull;
  std::vector<FaceData> out;
  for (int k = 0; k < hull.dim(); ++k) {
    for (const auto& face : hull.faces(k)) {
      const bool compact = std::none_of(np.shifted.begin(), np.shifted.end(),
                                        [&](const LatticePoint& p) { return hull.on_face(face, p); });
      if (!compact) continue;
      FaceData fd;
      fd.vertices = hull.face_points(face);
      sort_unique(fd.vertices);
      for (const auto& s : np.support) {
        if (hull.on_face(face, s)) fd.support.push_back(s);
      }
      fd.dim = k;
      fd.tau = smallest_containing_face(np.recession, fd.vertices);
      fd.c = static_cast<int>(fd.tau.dim()) - k;
      LatticeDistance ld = lattice_distance(fd.vertices);
      fd.m = ld.m;
      fd.ell = ld.ell;
      fd.hat_frame = ld.frame;
      fd.face_frame = saturated_basis(fd.vertices);
      fd.nvol_face = normalized_volume(fd.vertices, fd.face_frame);
      std::vector<LatticePoint> hat = fd.vertices;
      hat.push_back(zero_point(n));
      fd.nvol_hat = normalized_volume(hat, fd.hat_frame);
      fd.support_form = face.form;
      fd.support_value = face.value;
      out.push_back(std::move(fd));
    }
  }
  std::sort(out.begin(), out.end(), [](const FaceData& a, const FaceData& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  return out;
}

Cone normal_cone(const NewtonPolyhedron& np, const std::vector<LatticePoint>& face_points) {
  const std::size_t n = np.recession.ambient_rank();
  std::vector<LatticePoint> tangent = np.recession.generators();
  for (const auto& u : face_points) {
    for (const auto& s : np.support) tangent.push_back(sub(s, u));
  }
  return Cone(dual_generators(tangent, n), n);
}

Fan polar_fan(const NewtonPolyhedron& np) {
  std::vector<Cone> maximal;
  for (const auto& v : np.vertices) maximal.push_back(normal_cone(np, {v}));
  return Fan::from_cones(maximal, dual_cone(np.recession));
}

}  // namespace nmotive
