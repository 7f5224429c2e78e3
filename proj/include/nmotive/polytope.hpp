#pragma once

#include <cstddef>
#include <vector>

#include "nmotive/lattice.hpp"

namespace nmotive {

/// A face of a lattice polytope: indices into Polytope::vertices() plus an
/// ambient form whose minimum over the polytope is attained exactly there.
struct PolytopeFace {
  std::vector<std::size_t> vertices;
  IntegralLinearForm form;
  Int value;
};

/// Convex hull of finitely many lattice points with its complete face lattice.
class Polytope {
 public:
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  int dim() const { return dim_; }
  std::size_t ambient_rank() const { return frame_.ambient_rank(); }
  const AffineLatticeFrame& frame() const { return frame_; }

  /// Faces of dimension k, 0 <= k <= dim(). faces(dim()) is the polytope itself.
  const std::vector<PolytopeFace>& faces(int k) const { return faces_.at(static_cast<std::size_t>(k)); }
  std::vector<std::size_t> f_vector() const;

  /// For points p of the polytope: whether p lies on the face.
  bool on_face(const PolytopeFace& face, const LatticePoint& p) const;
  std::vector<LatticePoint> face_points(const PolytopeFace& face) const;

  /// Pulling triangulation into dim()-simplices, as vertex index lists.
  std::vector<std::vector<std::size_t>> triangulation() const;
  /// dim()! times the volume, measured in the saturated lattice of the affine hull.
  Int normalized_volume() const;

 private:
  friend Polytope convex_hull(const std::vector<LatticePoint>& points);

  std::vector<LatticePoint> vertices_;
  std::vector<LatticePoint> coords_;  // vertices in frame coordinates
  AffineLatticeFrame frame_;
  int dim_ = -1;
  std::vector<std::vector<PolytopeFace>> faces_;
};

/// Incremental beneath-beyond hull in the saturated frame of the input, with
/// exact integer orientation tests. Duplicate and non-extreme points are dropped.
Polytope convex_hull(const std::vector<LatticePoint>& points);

}  // namespace nmotive
