#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace nmotive {

using Int = mpz_class;
using Rat = mpq_class;

/// Element of the character lattice M (or of its dual N, depending on context).
using LatticePoint = std::vector<Int>;

/// Integer matrix stored as a list of rows.
using IntMatrix = std::vector<LatticePoint>;
using RatMatrix = std::vector<std::vector<Rat>>;

/// Integral linear form, evaluated by the standard pairing.
struct IntegralLinearForm {
  LatticePoint coeffs;
  bool primitive = false;

  Int operator()(const LatticePoint& p) const;
  bool operator==(const IntegralLinearForm& other) const { return coeffs == other.coeffs; }
};

/// Base point plus a basis of the saturated lattice M ∩ lin(S - base).
///
/// The constructor computes a Smith decomposition `U * B * V = [I | 0]` of the
/// basis matrix `B`, which makes coordinate extraction and integral lifting of
/// forms exact integer operations.
class AffineLatticeFrame {
 public:
  AffineLatticeFrame() = default;
  AffineLatticeFrame(LatticePoint base, IntMatrix basis);

  const LatticePoint& base() const { return base_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_rank() const { return base_.size(); }

  bool contains(const LatticePoint& p) const;
  /// Integer coordinates of `p - base` in the basis. Throws NotInLattice.
  LatticePoint coordinates(const LatticePoint& p) const;
  LatticePoint point(const LatticePoint& coords) const;
  /// An ambient integral form `w` with `w(b_j) = frame_form[j]` for every basis vector.
  LatticePoint lift_form(const LatticePoint& frame_form) const;

 private:
  LatticePoint base_;
  IntMatrix basis_;
  IntMatrix u_;  // rank x rank
  IntMatrix v_;  // ambient x ambient
};

struct SmithForm {
  IntMatrix d;      // U * A * V
  IntMatrix u;      // unimodular, rows x rows
  IntMatrix v;      // unimodular, cols x cols
  IntMatrix v_inv;  // inverse of v
  std::vector<Int> invariants;  // nonzero diagonal entries, each dividing the next
};

struct LatticeDistance {
  Int m;
  IntegralLinearForm ell;  // in coordinates of `frame`
  AffineLatticeFrame frame;  // base 0, basis of M ∩ lin(Γ ∪ {0})
};

Int dot(const LatticePoint& a, const LatticePoint& b);
LatticePoint sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint add(const LatticePoint& a, const LatticePoint& b);
LatticePoint scale(const LatticePoint& a, const Int& k);
Int content(const LatticePoint& v);
bool is_zero(const LatticePoint& v);
LatticePoint zero_point(std::size_t n);
LatticePoint unit_vector(std::size_t n, std::size_t i);
LatticePoint make_point(std::initializer_list<long> coords);
std::string to_string(const LatticePoint& p);

/// v / gcd(v). Throws ZeroVector.
LatticePoint primitive(const LatticePoint& v);

std::size_t rank(const IntMatrix& rows);
/// Dimension of the affine hull; -1 for an empty list.
int affine_dimension(const std::vector<LatticePoint>& points);
Int determinant(const IntMatrix& square);
/// Rational row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& a);

/// Row-style Hermite normal form of the row lattice (zero rows dropped,
/// positive pivots, entries above pivots reduced into [0, pivot)).
IntMatrix hermite_normal_form(IntMatrix rows);
SmithForm smith_normal_form(const IntMatrix& a);

/// Saturated basis of {x in Z^n : A x = 0}, A given by rows.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols);

AffineLatticeFrame saturated_basis(const std::vector<LatticePoint>& points);
bool is_saturated(const IntMatrix& basis);

/// d! times the Euclidean volume of conv(points) measured in frame coordinates.
Int normalized_volume(const std::vector<LatticePoint>& points, const AffineLatticeFrame& frame);
/// Normalized volume in the saturated frame of the points themselves.
Int normalized_volume(const std::vector<LatticePoint>& points);

LatticeDistance lattice_distance(const std::vector<LatticePoint>& face);

}  // namespace nmotive
