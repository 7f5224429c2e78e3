#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nmotive/cone.hpp"
#include "nmotive/errors.hpp"
#include "nmotive/laurent.hpp"
#include "nmotive/motivic.hpp"
#include "nmotive/newton.hpp"
#include "nmotive/nondegeneracy.hpp"

namespace nmotive {

struct Options {
  std::vector<long> primes = default_primes();
  bool strict = false;  // anything short of ExactNondegenerate is an error
  unsigned jobs = 1;
};

/// A germ f ∈ k[M ∩ σ∨] at the torus-fixed point.
struct GermInput {
  LaurentPolynomial f;
  Cone sigma_dual;
  Options options;

  static GermInput orthant(LaurentPolynomial f, Options options = {});
};

struct MilnorFibre {
  MotivicElement psi;  // canonical
  std::vector<FaceData> faces;
  NondegeneracyVerdict verdict;
  std::vector<std::string> warnings;
};

/// ψ_{f,x} = Σ_Γ (1-L)^(c-1) [U_Γ] + (1-L)^c [U'_Γ] over the compact faces.
/// Throws NotConvenient, Degenerate, OriginInSupport, StrictModeViolation.
MilnorFibre motivic_milnor_fibre(const GermInput& g);

/// (-1)^(n-1) (χ(ψ) - 1).
Int milnor_from_euler(const Int& euler, std::size_t n);
Int milnor_number(const GermInput& g);

/// Σ_k (-1)^(n-k) k! V_k, with k! V_k = k! M^k - nvol(Δ_I ∩ [0,M]^k) summed
/// over coordinate subsets I of size k. Throws NotOrthant, NotConvenient.
Int kouchnirenko_mu(const GermInput& g);

/// ∏ over compact faces with c = 1 of (1 - t^m)^((-1)^(dim+1) nvol_face).
ZetaFunction direct_zeta(const std::vector<FaceData>& faces);
/// zeta_specialize(ψ), checked against direct_zeta. Throws InternalMismatch.
ZetaFunction monodromy_zeta(const GermInput& g);

struct WhDecomposition {
  WeightedHomogeneity weights;
  MotivicElement v;         // [V]
  MotivicElement v_inf;     // [V_∞]
  MotivicElement psi_global;  // [V] - [V_∞]
  MotivicElement psi_local;   // [V] - L[V_∞]
  NondegeneracyVerdict verdict;
};

/// Throws NotWeightedHomogeneous, Degenerate.
WhDecomposition wh_decomposition(const LaurentPolynomial& f, const Options& options = {});

struct ReportError {
  std::string kind;
  std::string message;
  ErrorClass error_class = ErrorClass::Internal;
  std::vector<LatticePoint> missing_rays;  // NotConvenient
  std::vector<LatticePoint> face;          // Degenerate
  std::vector<Rat> witness;                // Degenerate
  std::string certificate;                 // Degenerate
};

ReportError report_error(const std::exception& e);

struct AnalysisReport {
  std::size_t rank = 0;
  std::optional<bool> convenient;
  std::vector<LatticePoint> missing_rays;
  std::optional<NondegeneracyVerdict> nondegeneracy;
  std::vector<FaceData> faces;
  std::optional<MotivicElement> psi_local;
  std::optional<Int> euler;
  std::optional<Int> milnor;
  std::optional<ZetaFunction> zeta;

  // Cross-checks, present when applicable.
  std::optional<ZetaFunction> zeta_direct;
  std::optional<Int> kouchnirenko;
  std::optional<Int> wh_euler;
  std::optional<ZetaFunction> wh_zeta;
  std::optional<bool> degree_identity;

  std::vector<std::string> warnings;
  std::vector<ReportError> errors;

  bool oracles_agree() const;
};

AnalysisReport analyze(const GermInput& g);

}  // namespace nmotive
