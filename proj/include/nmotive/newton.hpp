#pragma once

#include <cstddef>
#include <vector>

#include "nmotive/cone.hpp"
#include "nmotive/lattice.hpp"
#include "nmotive/polytope.hpp"

namespace nmotive {

/// One compact face of a Newton polyhedron with the data the face sum needs.
struct FaceData {
  std::vector<LatticePoint> vertices;  // extreme points, sorted
  std::vector<LatticePoint> support;   // supp(f) lying on the face, sorted
  int dim = 0;
  Cone tau;      // smallest face of sigma-dual whose relative interior meets the face's
  int c = 0;     // dim tau - dim face
  Int m;         // lattice distance from the origin
  IntegralLinearForm ell;       // primitive form on M ∩ lin(face ∪ {0}), frame coordinates
  AffineLatticeFrame hat_frame;  // frame of M ∩ lin(face ∪ {0})
  AffineLatticeFrame face_frame; // frame of the face's own difference lattice
  Int nvol_face;
  Int nvol_hat;
  IntegralLinearForm support_form;  // ambient form minimized over the polyhedron exactly on the face
  Int support_value;
};

/// Newton polyhedron conv(supp + sigma-dual), represented through the polytope
/// P = conv(supp' ∪ (supp' + rays)) where supp' is the dominance-filtered support.
/// The faces of P containing no shifted point are exactly the compact faces.
struct NewtonPolyhedron {
  std::vector<LatticePoint> support;   // full input support, sorted
  std::vector<LatticePoint> vertices;  // vertices of the polyhedron
  Cone recession;                      // sigma-dual
  Polytope hull;                       // P
  std::vector<LatticePoint> shifted;   // the points supp' + ray, sorted
};

/// Throws SupportOutsideCone, ConeNotStrictlyConvex.
NewtonPolyhedron newton_polyhedron(const std::vector<LatticePoint>& support, const Cone& sigma_dual);

/// All compact faces sorted by (dim, vertices). Throws OriginInSupport.
std::vector<FaceData> compact_faces(const NewtonPolyhedron& np);

/// Throws FaceNotInCone.
Cone smallest_containing_face(const Cone& sigma_dual, const std::vector<LatticePoint>& face);

/// Inner normal cone in N of the face of the polyhedron spanned by `face_points`.
Cone normal_cone(const NewtonPolyhedron& np, const std::vector<LatticePoint>& face_points);

/// The polar fan: normal cones of all faces of the polyhedron, subdividing sigma.
Fan polar_fan(const NewtonPolyhedron& np);

}  // namespace nmotive
