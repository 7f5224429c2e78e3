#include "nmotive/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <utility>

#include "nmotive/errors.hpp"

namespace nmotive {

namespace {

struct Halfspace {
  LatticePoint normal;  // normal . y >= offset on the hull
  Int offset;
  bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
};

// Hyperplane through d affinely independent points of Z^d, via the
// generalized cross product of the difference vectors.
Halfspace hyperplane_through(const std::vector<LatticePoint>& pts) {
  const std::size_t d = pts.front().size();
  assert(pts.size() == d);
  IntMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  LatticePoint normal(d);
  for (std::size_t col = 0; col < d; ++col) {
    IntMatrix minor;
    for (const auto& row : diffs) {
      LatticePoint r;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != col) r.push_back(row[j]);
      }
      minor.push_back(std::move(r));
    }
    Int det = determinant(minor);
    normal[col] = (col % 2 == 0) ? det : Int(-det);
  }
  normal = primitive(normal);
  Int offset = dot(normal, pts[0]);
  return {std::move(normal), std::move(offset)};
}

// Orients h so that the scaled interior point lies strictly on the positive side.
void orient(Halfspace& h, const LatticePoint& interior_scaled, const Int& scale_factor) {
  const Int s = dot(h.normal, interior_scaled) - scale_factor * h.offset;
  assert(s != 0);
  if (s < 0) {
    for (auto& x : h.normal) x = -x;
    h.offset = -h.offset;
  }
}

std::vector<LatticePoint> independent_subset(const std::vector<LatticePoint>& pts, std::size_t want) {
  std::vector<LatticePoint> chosen;
  for (const auto& p : pts) {
    chosen.push_back(p);
    if (affine_dimension(chosen) + 1 != static_cast<int>(chosen.size())) chosen.pop_back();
    if (chosen.size() == want) break;
  }
  return chosen;
}

std::vector<Halfspace> full_dimensional_hull(const std::vector<LatticePoint>& y) {
  const std::size_t d = y.front().size();
  std::vector<Halfspace> facets;
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(y.begin(), y.end(),
                                        [](const LatticePoint& a, const LatticePoint& b) { return a[0] < b[0]; });
    facets.push_back({make_point({1}), (*lo)[0]});
    facets.push_back({make_point({-1}), -(*hi)[0]});
    return facets;
  }

  std::vector<std::size_t> simplex;
  {
    std::vector<LatticePoint> chosen;
    for (std::size_t i = 0; i < y.size() && simplex.size() < d + 1; ++i) {
      chosen.push_back(y[i]);
      if (affine_dimension(chosen) + 1 == static_cast<int>(chosen.size())) {
        simplex.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  assert(simplex.size() == d + 1);

  LatticePoint interior = zero_point(d);
  for (std::size_t i : simplex) interior = add(interior, y[i]);
  const Int scale_factor(static_cast<unsigned long>(d + 1));

  for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
    std::vector<LatticePoint> pts;
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      if (k != omit) pts.push_back(y[simplex[k]]);
    }
    Halfspace h = hyperplane_through(pts);
    orient(h, interior, scale_factor);
    facets.push_back(std::move(h));
  }

  std::vector<bool> is_inserted(y.size(), false);
  std::vector<std::size_t> inserted(simplex.begin(), simplex.end());
  for (std::size_t i : simplex) is_inserted[i] = true;

  for (std::size_t p = 0; p < y.size(); ++p) {
    if (is_inserted[p]) continue;
    std::vector<Halfspace> visible, kept;
    for (auto& f : facets) {
      (dot(f.normal, y[p]) < f.offset ? visible : kept).push_back(f);
    }
    if (visible.empty()) continue;

    std::vector<Halfspace> created;
    for (const auto& v : visible) {
      std::vector<std::size_t> on_v;
      for (std::size_t q : inserted) {
        if (dot(v.normal, y[q]) == v.offset) on_v.push_back(q);
      }
      for (const auto& w : kept) {
        std::vector<LatticePoint> ridge;
        for (std::size_t q : on_v) {
          if (dot(w.normal, y[q]) == w.offset) ridge.push_back(y[q]);
        }
        if (affine_dimension(ridge) != static_cast<int>(d) - 2) continue;
        std::vector<LatticePoint> pts = independent_subset(ridge, d - 1);
        pts.push_back(y[p]);
        Halfspace h = hyperplane_through(pts);
        orient(h, interior, scale_factor);
        if (std::find(kept.begin(), kept.end(), h) == kept.end() &&
            std::find(created.begin(), created.end(), h) == created.end()) {
          created.push_back(std::move(h));
        }
      }
    }
    facets = std::move(kept);
    facets.insert(facets.end(), created.begin(), created.end());
    inserted.push_back(p);
    is_inserted[p] = true;
  }
  return facets;
}

using IndexSet = std::vector<std::size_t>;

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

Polytope convex_hull(const std::vector<LatticePoint>& input) {
  assert(!input.empty());
  std::vector<LatticePoint> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope poly;
  poly.frame_ = saturated_basis(pts);
  const std::size_t d = poly.frame_.rank();
  poly.dim_ = static_cast<int>(d);
  const std::size_t n = pts.front().size();

  if (d == 0) {
    poly.vertices_ = {pts.front()};
    poly.coords_ = {LatticePoint{}};
    poly.faces_ = {{PolytopeFace{{0}, IntegralLinearForm{zero_point(n), false}, Int(0)}}};
    return poly;
  }

  std::vector<LatticePoint> y;
  y.reserve(pts.size());
  for (const auto& p : pts) y.push_back(poly.frame_.coordinates(p));
  const std::vector<Halfspace> facets = full_dimensional_hull(y);

  // Extreme points: those whose incident facet normals span the whole space.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntMatrix normals;
    for (const auto& f : facets) {
      if (dot(f.normal, y[i]) == f.offset) normals.push_back(f.normal);
    }
    if (rank(normals) == d) {
      poly.vertices_.push_back(pts[i]);
      poly.coords_.push_back(y[i]);
    }
  }

  std::vector<IndexSet> facet_sets;
  for (const auto& f : facets) {
    IndexSet s;
    for (std::size_t v = 0; v < poly.coords_.size(); ++v) {
      if (dot(f.normal, poly.coords_[v]) == f.offset) s.push_back(v);
    }
    facet_sets.push_back(std::move(s));
  }

  std::vector<std::set<IndexSet>> levels(d + 1);
  IndexSet all(poly.coords_.size());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  levels[d].insert(all);
  for (const auto& s : facet_sets) levels[d - 1].insert(s);
  for (std::size_t k = d - 1; k >= 1; --k) {
    // The facets of a face are its inclusion-maximal proper nonempty
    // intersections with facets of the polytope.
    for (const auto& face : levels[k]) {
      std::set<IndexSet> meets;
      for (const auto& facet : facet_sets) {
        IndexSet meet = intersect(face, facet);
        if (!meet.empty() && meet.size() < face.size()) meets.insert(std::move(meet));
      }
      for (const auto& m : meets) {
        const bool maximal = std::none_of(meets.begin(), meets.end(), [&](const IndexSet& o) {
          return o.size() > m.size() && std::includes(o.begin(), o.end(), m.begin(), m.end());
        });
        if (maximal) levels[k - 1].insert(m);
      }
    }
  }

  poly.faces_.resize(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    for (const auto& s : levels[k]) {
      PolytopeFace face;
      face.vertices = s;
      if (k == d) {
        face.form = IntegralLinearForm{zero_point(n), false};
        face.value = 0;
      } else {
        LatticePoint frame_form = zero_point(d);
        for (std::size_t f = 0; f < facets.size(); ++f) {
          if (std::includes(facet_sets[f].begin(), facet_sets[f].end(), s.begin(), s.end())) {
            frame_form = add(frame_form, facets[f].normal);
          }
        }
        LatticePoint w = poly.frame_.lift_form(frame_form);
        w = primitive(w);
        face.form = IntegralLinearForm{w, true};
        face.value = dot(w, poly.vertices_[s.front()]);
      }
      poly.faces_[k].push_back(std::move(face));
    }
  }
  return poly;
}

std::vector<std::size_t> Polytope::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_) f.push_back(level.size());
  return f;
}

bool Polytope::on_face(const PolytopeFace& face, const LatticePoint& p) const {
  return dot(face.form.coeffs, p) == face.value;
}

std::vector<LatticePoint> Polytope::face_points(const PolytopeFace& face) const {
  std::vector<LatticePoint> r;
  for (std::size_t v : face.vertices) r.push_back(vertices_[v]);
  return r;
}

std::vector<std::vector<std::size_t>> Polytope::triangulation() const {
  if (dim_ <= 0) return {{0}};
  std::map<std::pair<int, std::size_t>, std::vector<IndexSet>> memo;

  auto rec = [&](auto&& self, int k, std::size_t idx) -> std::vector<IndexSet> {
    auto key = std::make_pair(k, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const IndexSet& face = faces_[static_cast<std::size_t>(k)][idx].vertices;
    std::vector<IndexSet> out;
    if (k == 0) {
      out.push_back(face);
    } else {
      const std::size_t apex = face.front();
      const auto& lower = faces_[static_cast<std::size_t>(k - 1)];
      for (std::size_t j = 0; j < lower.size(); ++j) {
        const IndexSet& g = lower[j].vertices;
        if (std::binary_search(g.begin(), g.end(), apex)) continue;
        if (!std::includes(face.begin(), face.end(), g.begin(), g.end())) continue;
        for (auto simplex : self(self, k - 1, j)) {
          simplex.insert(simplex.begin(), apex);
          out.push_back(std::move(simplex));
        }
      }
    }
    memo.emplace(key, out);
    return out;
  };
  return rec(rec, dim_, 0);
}

Int Polytope::normalized_volume() const {
  if (dim_ <= 0) return 1;
  Int total = 0;
  for (const auto& simplex : triangulation()) {
    IntMatrix m;
    for (std::size_t i = 1; i < simplex.size(); ++i) m.push_back(sub(coords_[simplex[i]], coords_[simplex[0]]));
    total += abs(determinant(m));
  }
  return total;
}

Int normalized_volume(const std::vector<LatticePoint>& points, const AffineLatticeFrame& frame) {
  assert(!points.empty());
  if (frame.rank() == 0) return 1;
  std::vector<LatticePoint> coords;
  coords.reserve(points.size());
  for (const auto& p : points) coords.push_back(frame.coordinates(p));
  Polytope hull = convex_hull(coords);
  if (hull.dim() != static_cast<int>(frame.rank())) {
    throw DimensionMismatch("hull dimension " + std::to_string(hull.dim()) + " is below frame rank " +
                            std::to_string(frame.rank()));
  }
  // The hull's own frame is a unimodular change of coordinates of Z^d.
  return hull.normalized_volume();
}

}  // namespace nmotive
