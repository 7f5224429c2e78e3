#pragma once

#include <cstddef>
#include <vector>

#include "nmotive/lattice.hpp"

namespace nmotive {

/// Rational polyhedral cone given by primitive generators.
///
/// The dual generators are computed eagerly, so every Cone is immutable and
/// can be shared freely. For strictly convex cones the generators are exactly
/// the extreme rays; for cones with lineality, the lineality space appears as
/// +/- pairs of generators.
class Cone {
 public:
  Cone() = default;
  /// Generators are made primitive and deduplicated; zero generators are dropped.
  /// Strictly convex inputs are reduced to their extreme rays.
  Cone(std::vector<LatticePoint> generators, std::size_t ambient_rank);

  static Cone orthant(std::size_t n);
  static Cone zero(std::size_t n) { return Cone({}, n); }

  const std::vector<LatticePoint>& generators() const { return gens_; }
  /// Generators of the dual cone (inward facet normals when full-dimensional).
  const std::vector<LatticePoint>& dual_generators() const { return dual_; }
  std::size_t ambient_rank() const { return n_; }
  std::size_t dim() const { return dim_; }

  bool is_strictly_convex() const { return pointed_; }
  bool is_full_dimensional() const { return dim_ == n_; }
  bool contains(const LatticePoint& p) const;
  bool is_orthant() const;

  /// All faces, including {0} and the cone itself. Strictly convex cones only.
  std::vector<Cone> faces() const;
  /// Inclusion-minimal face containing p (p must lie in the cone).
  Cone minimal_face_containing(const LatticePoint& p) const;
  /// Sum of the generators: a point of the relative interior.
  LatticePoint interior_point() const;

  bool operator==(const Cone& other) const { return n_ == other.n_ && gens_ == other.gens_; }
  bool operator<(const Cone& other) const;

 private:
  struct ExtremeRays {};
  // `rays` are already the primitive, sorted extreme rays of a pointed cone.
  Cone(ExtremeRays, std::vector<LatticePoint> rays, std::size_t ambient_rank);

  std::vector<LatticePoint> gens_;  // sorted
  std::vector<LatticePoint> dual_;  // sorted
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  bool pointed_ = true;
};

/// Generators of {m : <m, g> >= 0 for all g}, by enumeration of extreme rays
/// of the pointed part inside span(generators) plus a lineality basis.
std::vector<LatticePoint> dual_generators(const std::vector<LatticePoint>& generators, std::size_t ambient_rank);

Cone dual_cone(const Cone& c);

/// A fan with every face of every member stored explicitly.
struct Fan {
  std::vector<Cone> cones;  // sorted by (dim, generators), including {0}
  Cone support;

  /// Closes the given cones under taking faces.
  static Fan from_cones(const std::vector<Cone>& cones, Cone support);

  std::vector<LatticePoint> rays() const;
  std::vector<Cone> cones_of_dim(std::size_t k) const;
  std::vector<Cone> maximal_cones() const;
  bool has_ray(const LatticePoint& ray) const;
};

/// Star subdivision at a primitive ray of |fan|. Throws RayOutsideSupport.
/// Subdividing at an existing ray returns the fan unchanged.
Fan star_subdivide(const Fan& fan, const LatticePoint& ray);

/// Euler-count form of the refinement identity: for every face s of sigma,
/// the cones t of the refinement with relative interior inside that of s
/// satisfy sum (-1)^dim t = (-1)^dim s. Throws NotARefinement.
bool refinement_euler_check(const Fan& refined, const Cone& sigma);

}  // namespace nmotive
