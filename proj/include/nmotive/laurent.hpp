#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nmotive/cone.hpp"
#include "nmotive/lattice.hpp"
#include "nmotive/newton.hpp"

namespace nmotive {

/// Finite sum of monomials with exact rational coefficients. No stored
/// coefficient is zero.
struct LaurentPolynomial {
  std::map<LatticePoint, Rat> terms;
  std::size_t rank = 0;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t n) : rank(n) {}

  void add_term(const LatticePoint& exponent, const Rat& coeff);
  std::vector<LatticePoint> support() const;
  bool is_zero() const { return terms.empty(); }
  /// Value at a point with all coordinates nonzero.
  Rat evaluate(const std::vector<Rat>& x) const;
  /// x_i d/dx_i.
  LaurentPolynomial log_derivative(std::size_t i) const;

  /// Terms in decreasing exponent order, e.g. "x^2+y^3-1".
  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const LaurentPolynomial& other) const { return rank == other.rank && terms == other.terms; }
};

std::vector<std::string> default_variable_names(std::size_t n);

struct ParsedPolynomial {
  LaurentPolynomial poly;
  std::vector<std::string> variables;
};

/// Grammar: signed sums of products of rational numbers and powers `v^k`
/// (k may be negative); `*` is optional and `/ q` divides the coefficient.
/// With no declared variables, names are a letter plus optional digits,
/// numbered in order of first use. Throws SyntaxError, UnknownVariable.
ParsedPolynomial parse(const std::string& text, const std::vector<std::string>& variables = {});

/// f^Γ: the terms of f whose exponents lie on the face.
LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const FaceData& face);
/// Terms on the face of a polytope containing supp(f).
LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const Polytope& hull, const PolytopeFace& face);

/// f rewritten in frame coordinates: exponent u becomes frame.coordinates(u).
LaurentPolynomial to_frame(const LaurentPolynomial& f, const AffineLatticeFrame& frame);
/// Multiplies by the monomial making every exponent coordinate's minimum zero.
LaurentPolynomial shift_to_origin(const LaurentPolynomial& f);

struct Convenience {
  bool convenient = false;
  std::vector<LatticePoint> missing_rays;
};

/// Whether supp(f) meets every ray of sigma-dual. Throws SupportOutsideCone.
Convenience is_convenient(const LaurentPolynomial& f, const Cone& sigma_dual);

struct WeightedHomogeneity {
  enum class Status { Homogeneous, NotHomogeneous, NonUnique };
  Status status = Status::NotHomogeneous;
  std::vector<Rat> ell;  // l(m) = 1 on supp(f)
  Int e;                 // l(M) = (1/e) Z
};

WeightedHomogeneity weighted_homogeneity(const LaurentPolynomial& f);

}  // namespace nmotive
