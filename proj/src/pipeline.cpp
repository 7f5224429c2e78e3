#include "nmotive/pipeline.hpp"

#include <algorithm>

#include "nmotive/errors.hpp"

namespace nmotive {

GermInput GermInput::orthant(LaurentPolynomial f, Options options) {
  const std::size_t n = f.rank;
  return GermInput{std::move(f), Cone::orthant(n), std::move(options)};
}

namespace {

void check_rank(const GermInput& g) {
  if (g.f.rank == 0) throw DimensionMismatch("the polynomial has no variables");
  if (g.sigma_dual.ambient_rank() != g.f.rank) {
    throw DimensionMismatch("cone rank " + std::to_string(g.sigma_dual.ambient_rank()) +
                            " differs from the number of variables " + std::to_string(g.f.rank));
  }
  if (g.f.is_zero()) throw DimensionMismatch("the zero polynomial has no Newton polyhedron");
}

std::string face_label(const std::vector<LatticePoint>& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) s += (i ? "," : "") + to_string(face[i]);
  return s + "}";
}

// Applies the nondegeneracy policy: degenerate faces abort, uncertain faces
// warn (or abort in strict mode).
void enforce(const NondegeneracyVerdict& verdict, const Options& options, std::vector<std::string>& warnings) {
  if (const FaceVerdict* bad = verdict.first_degenerate()) {
    throw Degenerate(bad->face, bad->witness, bad->certificate);
  }
  for (const auto& fv : verdict.faces) {
    if (fv.status == FaceStatus::ExactNondegenerate) continue;
    const std::string msg = "face " + face_label(fv.face) + " is only " + to_string(fv.status);
    if (options.strict) throw StrictModeViolation(msg);
    warnings.push_back(msg);
  }
}

MotivicElement face_sum(const LaurentPolynomial& f, const std::vector<FaceData>& faces) {
  MotivicElement psi;
  for (const auto& face : faces) {
    const LaurentPolynomial f_face = restrict_to_face(f, face);
    psi.add(lpoly_one_minus_l(face.c - 1), atom_one(face, f_face));
    auto [nonzero, zero_atom] = atom_zero(face, f_face);
    if (nonzero) psi.add(lpoly_one_minus_l(face.c), zero_atom);
  }
  return canonicalize(psi);
}

Int factorial(unsigned k) {
  Int r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

MilnorFibre motivic_milnor_fibre(const GermInput& g) {
  check_rank(g);
  MilnorFibre out;
  const NewtonPolyhedron np = newton_polyhedron(g.f.support(), g.sigma_dual);
  out.faces = compact_faces(np);
  const Convenience conv = is_convenient(g.f, g.sigma_dual);
  if (!conv.convenient) throw NotConvenient(conv.missing_rays);
  out.verdict = nondegeneracy_check(g.f, out.faces, g.options.primes, g.options.jobs);
  enforce(out.verdict, g.options, out.warnings);
  out.psi = face_sum(g.f, out.faces);
  return out;
}

Int milnor_from_euler(const Int& euler, std::size_t n) {
  const Int reduced = euler - 1;
  return n % 2 == 1 ? reduced : Int(-reduced);
}

Int milnor_number(const GermInput& g) {
  return milnor_from_euler(euler_specialize(motivic_milnor_fibre(g).psi), g.f.rank);
}

Int kouchnirenko_mu(const GermInput& g) {
  check_rank(g);
  if (!g.sigma_dual.is_orthant()) throw NotOrthant("the Kouchnirenko oracle needs the standard orthant");
  const std::size_t n = g.f.rank;
  const std::vector<LatticePoint> supp = g.f.support();
  Int top = 0;
  for (const auto& u : supp) {
    if (is_zero(u)) throw OriginInSupport("0 is in the support");
    for (const auto& x : u) {
      if (x < 0) throw SupportOutsideCone(to_string(u) + " has a negative exponent");
      top = std::max(top, x);
    }
  }
  const Convenience conv = is_convenient(g.f, g.sigma_dual);
  if (!conv.convenient) throw NotConvenient(conv.missing_rays);
  const Int big = top + 1;

  Int nu = n % 2 == 0 ? Int(1) : Int(-1);  // k = 0, V_0 = 1
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) idx.push_back(i);
    }
    const std::size_t k = idx.size();
    std::vector<LatticePoint> corners;
    for (const auto& u : supp) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) inside = inside && (u[i] == 0 || (mask & (1ul << i)));
      if (!inside) continue;
      LatticePoint p(k);
      for (std::size_t j = 0; j < k; ++j) p[j] = u[idx[j]];
      for (unsigned long s = 0; s < (1ul << k); ++s) {
        LatticePoint q = p;
        for (std::size_t j = 0; j < k; ++j) {
          if (s & (1ul << j)) q[j] = big;
        }
        corners.push_back(std::move(q));
      }
    }
    Int box = 1;
    for (std::size_t j = 0; j < k; ++j) box *= big;
    const Int kv = factorial(static_cast<unsigned>(k)) * box - normalized_volume(corners);
    nu += (n - k) % 2 == 0 ? kv : Int(-kv);
  }
  return nu;
}

ZetaFunction direct_zeta(const std::vector<FaceData>& faces) {
  ZetaFunction z;
  for (const auto& face : faces) {
    if (face.c != 1) continue;
    ZetaFunction one;
    one.factors[face.m] = face.dim % 2 == 1 ? face.nvol_face : Int(-face.nvol_face);
    z *= one;
  }
  return z;
}

ZetaFunction monodromy_zeta(const GermInput& g) {
  const MilnorFibre mf = motivic_milnor_fibre(g);
  ZetaFunction a = zeta_specialize(mf.psi);
  if (!(a == direct_zeta(mf.faces))) throw InternalMismatch("zeta paths disagree");
  return a;
}

WhDecomposition wh_decomposition(const LaurentPolynomial& f, const Options& options) {
  WhDecomposition out;
  out.weights = weighted_homogeneity(f);
  if (out.weights.status == WeightedHomogeneity::Status::NonUnique) {
    throw NotWeightedHomogeneous("the weight form is not unique: dim Conv(supp f) < n - 1");
  }
  if (out.weights.status != WeightedHomogeneity::Status::Homogeneous) {
    throw NotWeightedHomogeneous("no linear form is 1 on the whole support");
  }
  const Int& e = out.weights.e;
  const std::size_t n = f.rank;
  const Polytope hull = convex_hull(f.support());

  std::vector<std::string> warnings;
  MotivicElement v;
  MotivicElement v_inf;
  for (int k = 0; k <= hull.dim(); ++k) {
    for (const auto& face : hull.faces(k)) {
      std::vector<LatticePoint> verts = hull.face_points(face);
      std::sort(verts.begin(), verts.end());
      const LaurentPolynomial f_face = restrict_to_face(f, hull, face);
      out.verdict.faces.push_back(check_face(f_face, verts, options.primes));
      const std::string label = face_label(verts);

      // Stratum conv(0, F): {f^F = 1} in its orbit torus. μ_e acts on the
      // character b by ζ^(e·l(b)), so the effective order is
      // e / gcd(e, e·l(b_j)).
      std::vector<LatticePoint> hat{zero_point(n)};
      hat.insert(hat.end(), verts.begin(), verts.end());
      const AffineLatticeFrame hat_frame = saturated_basis(hat);
      Int g = e;
      for (const auto& b : hat_frame.basis()) {
        Rat lb = 0;
        for (std::size_t i = 0; i < n; ++i) lb += out.weights.ell[i] * Rat(b[i]);
        const Rat scaled = lb * Rat(e);
        g = gcd(g, Int(scaled.get_num()));
      }
      AtomicClass one;
      one.face = verts;
      one.provenance = "V" + label;
      one.m = e / g;
      one.torus_rank = hat_frame.rank();
      one.frame_basis = hat_frame.basis();
      one.poly = to_frame(f_face, hat_frame);
      const bool single_point = k == 0 && one.poly.terms.size() == 1 && abs(one.poly.terms.begin()->first[0]) == 1;
      one.poly.add_term(zero_point(one.torus_rank), Rat(-1));
      if (single_point) {
        one.kind = AtomKind::Point;
        one.torus_rank = 0;
        one.poly = LaurentPolynomial();
        one.frame_basis.clear();
      } else {
        one.kind = AtomKind::HypersurfaceOne;
      }
      one.chi = euler_from_volume(one);
      v.add(lpoly_constant(1), one);

      // Stratum F: {f^F = 0} in the torus of F, trivial action.
      if (k == 0) continue;
      AtomicClass zero;
      zero.kind = AtomKind::HypersurfaceZero;
      zero.face = verts;
      zero.provenance = "V'" + label;
      const AffineLatticeFrame frame = saturated_basis(verts);
      zero.torus_rank = frame.rank();
      zero.frame_basis = frame.basis();
      zero.poly = shift_to_origin(to_frame(f_face, frame));
      zero.m = 1;
      zero.chi = euler_from_volume(zero);
      v.add(lpoly_constant(1), zero);
      v_inf.add(lpoly_constant(1), zero);
    }
  }
  enforce(out.verdict, options, warnings);
  out.v = canonicalize(v);
  out.v_inf = canonicalize(v_inf);
  out.psi_global = canonicalize(v - v_inf);
  const LPoly l{{1, Int(1)}};
  out.psi_local = canonicalize(v - l * v_inf);
  return out;
}

ReportError report_error(const std::exception& e) {
  ReportError r;
  r.message = e.what();
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    r.kind = err->kind();
    r.error_class = err->error_class();
  } else {
    r.kind = "Error";
  }
  if (const auto* nc = dynamic_cast<const NotConvenient*>(&e)) r.missing_rays = nc->missing_rays();
  if (const auto* dg = dynamic_cast<const Degenerate*>(&e)) {
    r.face = dg->face();
    r.witness = dg->witness();
    r.certificate = dg->certificate();
  }
  return r;
}

bool AnalysisReport::oracles_agree() const {
  if (milnor && kouchnirenko && *milnor != *kouchnirenko) return false;
  if (zeta && zeta_direct && !(*zeta == *zeta_direct)) return false;
  if (euler && wh_euler && *euler != *wh_euler) return false;
  if (zeta && wh_zeta && !(*zeta == *wh_zeta)) return false;
  if (degree_identity && !*degree_identity) return false;
  return true;
}

AnalysisReport analyze(const GermInput& g) {
  AnalysisReport r;
  r.rank = g.f.rank;
  std::vector<FaceData> faces;
  try {
    check_rank(g);
    const NewtonPolyhedron np = newton_polyhedron(g.f.support(), g.sigma_dual);
    faces = compact_faces(np);
    r.faces = faces;
    const Convenience conv = is_convenient(g.f, g.sigma_dual);
    r.convenient = conv.convenient;
    r.missing_rays = conv.missing_rays;
    r.nondegeneracy = nondegeneracy_check(g.f, faces, g.options.primes, g.options.jobs);
    if (!conv.convenient) throw NotConvenient(conv.missing_rays);
    enforce(*r.nondegeneracy, g.options, r.warnings);
  } catch (const std::exception& e) {
    r.errors.push_back(report_error(e));
    return r;
  }

  try {
    r.psi_local = face_sum(g.f, faces);
    r.euler = euler_specialize(*r.psi_local);
    r.milnor = milnor_from_euler(*r.euler, g.f.rank);
    r.zeta = zeta_specialize(*r.psi_local);
    r.zeta_direct = direct_zeta(faces);
    r.degree_identity = r.zeta->degree() == -*r.euler;
  } catch (const std::exception& e) {
    r.errors.push_back(report_error(e));
    return r;
  }

  if (g.sigma_dual.is_orthant()) {
    try {
      r.kouchnirenko = kouchnirenko_mu(g);
    } catch (const std::exception& e) {
      r.warnings.push_back(std::string("Kouchnirenko oracle skipped: ") + e.what());
    }
  }

  // The global decomposition lives over the cone spanned by supp(f); it
  // describes this germ only when that cone is sigma-dual.
  if (weighted_homogeneity(g.f).status == WeightedHomogeneity::Status::Homogeneous &&
      Cone(g.f.support(), g.f.rank) == g.sigma_dual) {
    try {
      const WhDecomposition wh = wh_decomposition(g.f, g.options);
      r.wh_euler = euler_specialize(wh.psi_local);
      r.wh_zeta = zeta_specialize(wh.psi_local);
    } catch (const std::exception& e) {
      r.warnings.push_back(std::string("weighted-homogeneous cross-check skipped: ") + e.what());
    }
  }

  if (!r.oracles_agree()) {
    r.errors.push_back(ReportError{"InternalMismatch", "independent computations disagree", ErrorClass::Internal, {}, {}, {}, {}});
  }
  return r;
}

}  // namespace nmotive
