#pragma once

#include <string>
#include <vector>

#include "nmotive/laurent.hpp"
#include "nmotive/newton.hpp"

namespace nmotive {

enum class FaceStatus { ExactNondegenerate, ProvenDegenerate, LikelyNondegenerate, Inconclusive };

std::string to_string(FaceStatus s);

struct FaceVerdict {
  std::vector<LatticePoint> face;  // vertices
  int dim = 0;
  FaceStatus status = FaceStatus::ExactNondegenerate;
  /// A torus point where every x_i df/dx_i of f^face vanishes; may be empty
  /// for ProvenDegenerate when the repeated root is irrational.
  std::vector<Rat> witness;
  std::string certificate;
  std::vector<long> primes_tested;
};

struct NondegeneracyVerdict {
  std::vector<FaceVerdict> faces;

  const FaceVerdict* first_degenerate() const;
  bool all_exact() const;
  bool has(FaceStatus s) const;
};

const std::vector<long>& default_primes();

/// Decides the face condition for f^face, whose support lies on the face
/// spanned by `vertices`.
///
/// Writing f^face = x^u0 g(y) with y the torus of the face's difference
/// lattice, the logarithmic derivatives of f^face vanish together exactly
/// where g and all y_j dg/dy_j do, since u0 is independent of the face
/// directions. Edges reduce to squarefreeness of a univariate polynomial;
/// higher faces are scanned over (F_p^*)^d.
FaceVerdict check_face(const LaurentPolynomial& f_face, const std::vector<LatticePoint>& vertices,
                       const std::vector<long>& primes);

/// Per-face verdicts, in the order of `faces`. With jobs > 1 faces are
/// checked concurrently; the result does not depend on jobs.
NondegeneracyVerdict nondegeneracy_check(const LaurentPolynomial& f, const std::vector<FaceData>& faces,
                                         const std::vector<long>& primes, unsigned jobs = 1);

/// Whether x is a torus point where every logarithmic derivative of f vanishes.
bool verify_witness(const LaurentPolynomial& f, const std::vector<Rat>& x);

}  // namespace nmotive
