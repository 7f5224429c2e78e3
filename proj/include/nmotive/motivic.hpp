#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nmotive/laurent.hpp"
#include "nmotive/newton.hpp"

namespace nmotive {

enum class AtomKind { Point, HypersurfaceOne, HypersurfaceZero };

std::string to_string(AtomKind k);
AtomKind atom_kind_from_string(const std::string& s);

/// A class [Z(poly) ⊂ T^torus_rank] with a μ_m-action of order m.
///
/// HypersurfaceOne: poly is g - 1 for g weighted homogeneous in frame
/// coordinates; μ_m acts by translation, freely, so m | chi.
/// HypersurfaceZero: m = 1.
/// Point: torus_rank 0, chi 1.
struct AtomicClass {
  AtomKind kind = AtomKind::Point;
  std::size_t torus_rank = 0;
  LaurentPolynomial poly;
  Int m = 1;
  Int chi = 1;
  std::vector<LatticePoint> face;  // originating face, if any
  IntMatrix frame_basis;           // torus characters in ambient coordinates, if known
  std::string provenance;
};

/// Laurent polynomials in L with integer coefficients: power -> coefficient.
using LPoly = std::map<int, Int>;

LPoly lpoly_constant(const Int& c);
LPoly lpoly_one_minus_l(int k);  // (1 - L)^k, k >= 0
LPoly lpoly_mul(const LPoly& a, const LPoly& b);
LPoly lpoly_add(const LPoly& a, const LPoly& b);
Int lpoly_at_one(const LPoly& p);
/// Largest k with (1 - L)^k | p, and the cofactor. p must be nonzero.
std::pair<int, LPoly> lpoly_split_one_minus_l(const LPoly& p);

struct MotivicTerm {
  LPoly coeff;
  AtomicClass atom;
};

struct MotivicElement {
  std::vector<MotivicTerm> terms;

  void add(const LPoly& coeff, const AtomicClass& atom) { terms.push_back({coeff, atom}); }
  MotivicElement& operator+=(const MotivicElement& other);
  /// Equality of canonical forms.
  bool operator==(const MotivicElement& other) const;
};

MotivicElement operator*(const LPoly& c, const MotivicElement& e);
MotivicElement operator-(const MotivicElement& a, const MotivicElement& b);

/// Structural key deciding when two atoms are merged. Invariant under
/// GL(Z) changes of torus coordinates, and for HypersurfaceZero also under
/// multiplication by monomials.
std::string fingerprint(const AtomicClass& a);

/// Merges like atoms, drops zero coefficients, sorts by fingerprint.
MotivicElement canonicalize(const MotivicElement& e);

/// U_Γ = {f^Γ = 1} in the torus of M ∩ lin(Γ ∪ {0}), acted on by μ_m(Γ).
/// f_face must be restrict_to_face(f, face).
AtomicClass atom_one(const FaceData& face, const LaurentPolynomial& f_face);
/// U'_Γ = {f^Γ = 0} in the torus of the face's difference lattice; the
/// returned flag is false for vertices, whose class is zero.
std::pair<bool, AtomicClass> atom_zero(const FaceData& face, const LaurentPolynomial& f_face);

Int euler_atom(const AtomicClass& a);
/// chi recomputed from the Newton polytope of the atom's own polynomial.
Int euler_from_volume(const AtomicClass& a);
Int euler_specialize(const MotivicElement& e);

/// ∏ (1 - t^m)^exponent.
struct ZetaFunction {
  std::map<Int, Int> factors;

  ZetaFunction& operator*=(const ZetaFunction& other);
  ZetaFunction pow(const Int& k) const;
  /// Σ m·exponent, the degree of the rational function.
  Int degree() const;
  bool operator==(const ZetaFunction& other) const { return factors == other.factors; }
};

/// (1 - t^m)^(-chi/m). Throws ActionOrderError when m does not divide chi.
ZetaFunction zeta_atom(const AtomicClass& a);
ZetaFunction zeta_specialize(const MotivicElement& e);

}  // namespace nmotive
