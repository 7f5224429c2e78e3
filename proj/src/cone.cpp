#include "nmotive/cone.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "nmotive/errors.hpp"
#include "nmotive/polytope.hpp"

namespace nmotive {

namespace {

void sort_unique(std::vector<LatticePoint>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Calls fn on every k-subset of {0..n-1}.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool in_dual(const std::vector<LatticePoint>& dual, const LatticePoint& p) {
  return std::all_of(dual.begin(), dual.end(), [&](const LatticePoint& h) { return dot(h, p) >= 0; });
}

}  // namespace

std::vector<LatticePoint> dual_generators(const std::vector<LatticePoint>& generators, std::size_t n) {
  std::vector<LatticePoint> gens;
  for (const auto& g : generators) {
    if (!is_zero(g)) gens.push_back(primitive(g));
  }
  sort_unique(gens);

  std::vector<LatticePoint> out;
  // Lineality of the dual: the orthogonal complement of span(gens).
  for (const auto& k : integer_kernel(gens, n)) {
    out.push_back(k);
    out.push_back(scale(k, -1));
  }
  if (gens.empty()) {
    sort_unique(out);
    return out;
  }

  // Pointed part, parametrized by a basis of M ∩ span(gens).
  std::vector<LatticePoint> with_origin{zero_point(n)};
  with_origin.insert(with_origin.end(), gens.begin(), gens.end());
  const AffineLatticeFrame span = saturated_basis(with_origin);
  const IntMatrix& basis = span.basis();
  const std::size_t r = basis.size();

  // Constraint rows in span coordinates: (B g) . y >= 0.
  IntMatrix rows;
  for (const auto& g : gens) {
    LatticePoint row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = dot(basis[j], g);
    rows.push_back(primitive(row));
  }
  sort_unique(rows);

  auto to_ambient = [&](const LatticePoint& y) {
    LatticePoint m = zero_point(n);
    for (std::size_t j = 0; j < r; ++j) m = add(m, scale(basis[j], y[j]));
    return primitive(m);
  };
  auto feasible = [&](const LatticePoint& y) {
    return std::all_of(rows.begin(), rows.end(), [&](const LatticePoint& row) { return dot(row, y) >= 0; });
  };

  // Each extreme ray is cut out by r-1 independent tight constraints; their
  // kernel is spanned by the signed maximal minors, zero iff dependent.
  for_each_subset(rows.size(), r - 1, [&](const std::vector<std::size_t>& subset) {
    LatticePoint y(r);
    IntMatrix minor(r - 1, LatticePoint(r - 1));
    for (std::size_t drop = 0; drop < r; ++drop) {
      for (std::size_t i = 0; i < r - 1; ++i)
        for (std::size_t j = 0, c = 0; j < r; ++j)
          if (j != drop) minor[i][c++] = rows[subset[i]][j];
      y[drop] = determinant(minor);
      if (drop % 2 == 1) y[drop] = -y[drop];
    }
    if (is_zero(y)) return;
    y = primitive(y);
    if (feasible(y)) out.push_back(to_ambient(y));
    const LatticePoint neg = scale(y, -1);
    if (feasible(neg)) out.push_back(to_ambient(neg));
  });
  sort_unique(out);
  return out;
}

Cone::Cone(std::vector<LatticePoint> generators, std::size_t ambient_rank) : n_(ambient_rank) {
  for (auto& g : generators) {
    assert(g.size() == n_);
    if (!is_zero(g)) gens_.push_back(primitive(g));
  }
  sort_unique(gens_);
  dim_ = rank(gens_);
  dual_ = nmotive::dual_generators(gens_, n_);
  pointed_ = std::none_of(gens_.begin(), gens_.end(),
                          [&](const LatticePoint& g) { return in_dual(dual_, scale(g, -1)); });
  if (pointed_ && !gens_.empty()) {
    // Extreme rays are exactly the generators of the double dual.
    std::vector<LatticePoint> extreme = nmotive::dual_generators(dual_, n_);
    gens_ = std::move(extreme);
  }
}

Cone::Cone(ExtremeRays, std::vector<LatticePoint> rays, std::size_t ambient_rank)
    : gens_(std::move(rays)), n_(ambient_rank) {
  dim_ = rank(gens_);
  dual_ = nmotive::dual_generators(gens_, n_);
}

Cone Cone::orthant(std::size_t n) {
  std::vector<LatticePoint> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vector(n, i));
  return Cone(gens, n);
}

bool Cone::contains(const LatticePoint& p) const { return in_dual(dual_, p); }

bool Cone::is_orthant() const { return *this == orthant(n_); }

bool Cone::operator<(const Cone& other) const {
  if (dim_ != other.dim_) return dim_ < other.dim_;
  return gens_ < other.gens_;
}

LatticePoint Cone::interior_point() const {
  LatticePoint s = zero_point(n_);
  for (const auto& g : gens_) s = add(s, g);
  return s;
}

std::vector<Cone> Cone::faces() const {
  assert(pointed_);
  std::vector<Cone> out{Cone::zero(n_)};
  if (gens_.empty()) return out;
  // Cross-section by the hyperplane w = L, with w a sum of dual generators
  // (strictly positive on the cone minus the origin).
  LatticePoint w = zero_point(n_);
  for (const auto& h : dual_) w = add(w, h);
  Int l = 1;
  for (const auto& g : gens_) l = lcm(l, dot(w, g));
  std::vector<LatticePoint> section;
  std::map<LatticePoint, std::size_t> ray_of;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    LatticePoint q = scale(gens_[i], Int(l / dot(w, gens_[i])));
    ray_of.emplace(q, i);
    section.push_back(std::move(q));
  }
  const Polytope hull = convex_hull(section);
  for (int k = 0; k <= hull.dim(); ++k) {
    for (const auto& f : hull.faces(k)) {
      std::vector<LatticePoint> rays;
      for (std::size_t v : f.vertices) rays.push_back(gens_[ray_of.at(hull.vertices()[v])]);
      std::sort(rays.begin(), rays.end());
      out.push_back(Cone(ExtremeRays{}, std::move(rays), n_));
    }
  }
  return out;
}

Cone Cone::minimal_face_containing(const LatticePoint& p) const {
  std::vector<LatticePoint> tight;
  for (const auto& h : dual_) {
    if (dot(h, p) == 0) tight.push_back(h);
  }
  std::vector<LatticePoint> rays;
  for (const auto& g : gens_) {
    if (std::all_of(tight.begin(), tight.end(), [&](const LatticePoint& h) { return dot(h, g) == 0; })) {
      rays.push_back(g);
    }
  }
  if (!pointed_) return Cone(std::move(rays), n_);
  return Cone(ExtremeRays{}, std::move(rays), n_);
}

Cone dual_cone(const Cone& c) { return Cone(c.dual_generators(), c.ambient_rank()); }

Fan Fan::from_cones(const std::vector<Cone>& cones, Cone support) {
  std::set<Cone> all;
  for (const auto& c : cones) {
    for (auto& f : c.faces()) all.insert(std::move(f));
  }
  return Fan{std::vector<Cone>(all.begin(), all.end()), std::move(support)};
}

std::vector<LatticePoint> Fan::rays() const {
  std::vector<LatticePoint> out;
  for (const auto& c : cones) {
    if (c.dim() == 1) out.push_back(c.generators().front());
  }
  return out;
}

std::vector<Cone> Fan::cones_of_dim(std::size_t k) const {
  std::vector<Cone> out;
  for (const auto& c : cones) {
    if (c.dim() == k) out.push_back(c);
  }
  return out;
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones) {
    const bool is_max = std::none_of(cones.begin(), cones.end(), [&](const Cone& d) {
      return d.dim() > c.dim() && std::includes(d.generators().begin(), d.generators().end(),
                                                c.generators().begin(), c.generators().end());
    });
    if (is_max) out.push_back(c);
  }
  return out;
}

bool Fan::has_ray(const LatticePoint& ray) const {
  const LatticePoint r = primitive(ray);
  const auto rs = rays();
  return std::find(rs.begin(), rs.end(), r) != rs.end();
}

Fan star_subdivide(const Fan& fan, const LatticePoint& ray) {
  const LatticePoint v = primitive(ray);
  if (!fan.support.contains(v)) throw RayOutsideSupport("ray " + to_string(v) + " is outside the fan support");
  if (fan.has_ray(v)) return fan;

  std::set<Cone> out;
  std::vector<const Cone*> containing;
  for (const auto& c : fan.cones) {
    if (c.contains(v)) {
      containing.push_back(&c);
    } else {
      out.insert(c);
    }
  }
  for (const auto& f : fan.cones) {
    if (f.contains(v)) continue;
    const bool under = std::any_of(containing.begin(), containing.end(), [&](const Cone* c) {
      return std::includes(c->generators().begin(), c->generators().end(), f.generators().begin(),
                           f.generators().end());
    });
    if (!under) continue;
    std::vector<LatticePoint> gens = f.generators();
    gens.push_back(v);
    out.emplace(std::move(gens), f.ambient_rank());
  }
  return Fan{std::vector<Cone>(out.begin(), out.end()), fan.support};
}

bool refinement_euler_check(const Fan& refined, const Cone& sigma) {
  // Faces of sigma keyed by their extreme rays, a sorted subset of sigma's.
  std::map<std::vector<LatticePoint>, std::pair<std::size_t, long>> sums;
  for (const auto& s : sigma.faces()) sums[s.generators()] = {s.dim(), 0};
  for (const auto& t : refined.cones) {
    for (const auto& g : t.generators()) {
      if (!sigma.contains(g)) throw NotARefinement("cone generator " + to_string(g) + " is outside sigma");
    }
    // The face of sigma whose relative interior holds that of t.
    const LatticePoint p = t.interior_point();
    std::vector<LatticePoint> tight;
    for (const auto& h : sigma.dual_generators()) {
      if (dot(h, p) == 0) tight.push_back(h);
    }
    std::vector<LatticePoint> rays;
    for (const auto& g : sigma.generators()) {
      if (std::all_of(tight.begin(), tight.end(), [&](const LatticePoint& h) { return dot(h, g) == 0; })) {
        rays.push_back(g);
      }
    }
    auto it = sums.find(rays);
    if (it == sums.end()) throw NotARefinement("relative interior maps to no face of sigma");
    it->second.second += (t.dim() % 2 == 0) ? 1 : -1;
  }
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) {
    return kv.second.second == ((kv.second.first % 2 == 0) ? 1 : -1);
  });
}

}  // namespace nmotive
