#include "nmotive/motivic.hpp"

#include <algorithm>
#include <numeric>

#include "nmotive/errors.hpp"

namespace nmotive {

std::string to_string(AtomKind k) {
  switch (k) {
    case AtomKind::Point:
      return "Point";
    case AtomKind::HypersurfaceOne:
      return "HypersurfaceOne";
    case AtomKind::HypersurfaceZero:
      return "HypersurfaceZero";
  }
  return "?";
}

AtomKind atom_kind_from_string(const std::string& s) {
  if (s == "Point") return AtomKind::Point;
  if (s == "HypersurfaceOne") return AtomKind::HypersurfaceOne;
  if (s == "HypersurfaceZero") return AtomKind::HypersurfaceZero;
  throw DimensionMismatch("unknown atom kind '" + s + "'");
}

// ---- L-polynomials

namespace {

void drop_zeros(LPoly& p) {
  for (auto it = p.begin(); it != p.end();) {
    it = it->second == 0 ? p.erase(it) : std::next(it);
  }
}

}  // namespace

LPoly lpoly_constant(const Int& c) {
  LPoly p;
  if (c != 0) p[0] = c;
  return p;
}

LPoly lpoly_one_minus_l(int k) {
  LPoly p = lpoly_constant(1);
  const LPoly f{{0, Int(1)}, {1, Int(-1)}};
  for (int i = 0; i < k; ++i) p = lpoly_mul(p, f);
  return p;
}

LPoly lpoly_mul(const LPoly& a, const LPoly& b) {
  LPoly r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r[i + j] += x * y;
  drop_zeros(r);
  return r;
}

LPoly lpoly_add(const LPoly& a, const LPoly& b) {
  LPoly r = a;
  for (const auto& [j, y] : b) r[j] += y;
  drop_zeros(r);
  return r;
}

Int lpoly_at_one(const LPoly& p) {
  Int s = 0;
  for (const auto& [i, x] : p) s += x;
  return s;
}

std::pair<int, LPoly> lpoly_split_one_minus_l(const LPoly& p) {
  int k = 0;
  LPoly q = p;
  while (!q.empty() && lpoly_at_one(q) == 0) {
    // p = (1 - L) r  <=>  r_i = Σ_{j <= i} p_j
    LPoly r;
    Int acc = 0;
    const int lo = q.begin()->first;
    const int hi = q.rbegin()->first;
    for (int i = lo; i < hi; ++i) {
      auto it = q.find(i);
      if (it != q.end()) acc += it->second;
      if (acc != 0) r[i] = acc;
    }
    q = std::move(r);
    ++k;
  }
  return {k, q};
}

// ---- elements

MotivicElement& MotivicElement::operator+=(const MotivicElement& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

MotivicElement operator*(const LPoly& c, const MotivicElement& e) {
  MotivicElement r;
  for (const auto& t : e.terms) r.add(lpoly_mul(c, t.coeff), t.atom);
  return r;
}

MotivicElement operator-(const MotivicElement& a, const MotivicElement& b) {
  MotivicElement r = a;
  r += lpoly_constant(-1) * b;
  return r;
}

bool MotivicElement::operator==(const MotivicElement& other) const {
  const MotivicElement a = canonicalize(*this);
  const MotivicElement b = canonicalize(other);
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].coeff != b.terms[i].coeff) return false;
    if (fingerprint(a.terms[i].atom) != fingerprint(b.terms[i].atom)) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kPermutationCap = 5040;

IntMatrix exponent_hnf(const std::vector<LatticePoint>& columns, std::size_t rows, bool differences) {
  IntMatrix m(rows, LatticePoint(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const LatticePoint c = differences ? sub(columns[j], columns.front()) : columns[j];
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = c[i];
  }
  return hermite_normal_form(std::move(m));
}

std::string matrix_string(const IntMatrix& m) {
  std::string s = "[";
  for (const auto& row : m) s += to_string(row);
  return s + "]";
}

}  // namespace

std::string fingerprint(const AtomicClass& a) {
  std::string key = to_string(a.kind) + "|" + std::to_string(a.torus_rank) + "|" + a.m.get_str() + "|" +
                    a.chi.get_str() + "|";
  if (a.kind == AtomKind::Point) return key;

  // Coefficient groups in increasing coefficient order; columns may be
  // permuted within a group.
  std::map<Rat, std::vector<LatticePoint>> groups;
  for (const auto& [u, c] : a.poly.terms) groups[c].push_back(u);
  std::size_t count = 1;
  for (auto& [c, g] : groups) {
    std::sort(g.begin(), g.end());
    key += c.get_str() + "x" + std::to_string(g.size()) + ",";
    for (std::size_t i = 2; i <= g.size() && count <= kPermutationCap; ++i) count *= i;
  }
  const bool differences = a.kind == AtomKind::HypersurfaceZero;

  auto columns = [&]() {
    std::vector<LatticePoint> cols;
    for (const auto& [c, g] : groups) cols.insert(cols.end(), g.begin(), g.end());
    return cols;
  };
  IntMatrix best = exponent_hnf(columns(), a.poly.rank, differences);
  if (count <= kPermutationCap) {
    // Odometer over the product of per-group permutations.
    std::vector<std::vector<LatticePoint>*> gs;
    for (auto& [c, g] : groups) gs.push_back(&g);
    while (true) {
      std::size_t i = 0;
      while (i < gs.size() && !std::next_permutation(gs[i]->begin(), gs[i]->end())) ++i;
      if (i == gs.size()) break;
      best = std::min(best, exponent_hnf(columns(), a.poly.rank, differences));
    }
  }
  return key + "|" + matrix_string(best);
}

MotivicElement canonicalize(const MotivicElement& e) {
  struct Slot {
    LPoly coeff;
    AtomicClass atom;
    std::string rep;
  };
  std::map<std::string, Slot> merged;
  for (const auto& t : e.terms) {
    const std::string key = fingerprint(t.atom);
    const std::string rep = t.atom.poly.to_string(default_variable_names(t.atom.poly.rank)) + "#" + t.atom.provenance;
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, Slot{t.coeff, t.atom, rep});
      continue;
    }
    it->second.coeff = lpoly_add(it->second.coeff, t.coeff);
    if (rep < it->second.rep) {
      it->second.atom = t.atom;
      it->second.rep = rep;
    }
  }
  MotivicElement out;
  for (auto& [key, slot] : merged) {
    if (!slot.coeff.empty()) out.add(slot.coeff, slot.atom);
  }
  return out;
}

// ---- atoms

namespace {

std::string face_string(const std::vector<LatticePoint>& face) {
  std::string s;
  for (const auto& v : face) s += to_string(v);
  return s;
}

Int signed_by_parity(int k, const Int& v) { return k % 2 == 0 ? v : Int(-v); }

}  // namespace

AtomicClass atom_one(const FaceData& face, const LaurentPolynomial& f_face) {
  AtomicClass a;
  a.face = face.vertices;
  a.provenance = "U" + face_string(face.vertices);
  a.m = face.m;
  a.chi = signed_by_parity(face.dim, face.nvol_hat);
  if (face.dim == 0 && face.m == 1) {
    // {c·y = 1} in a rank-one torus: a single point.
    a.kind = AtomKind::Point;
    return a;
  }
  a.kind = AtomKind::HypersurfaceOne;
  a.torus_rank = face.hat_frame.rank();
  a.frame_basis = face.hat_frame.basis();
  a.poly = to_frame(f_face, face.hat_frame);
  a.poly.add_term(zero_point(a.torus_rank), Rat(-1));
  return a;
}

std::pair<bool, AtomicClass> atom_zero(const FaceData& face, const LaurentPolynomial& f_face) {
  AtomicClass a;
  if (face.dim == 0) return {false, a};
  a.kind = AtomKind::HypersurfaceZero;
  a.face = face.vertices;
  a.provenance = "U'" + face_string(face.vertices);
  a.torus_rank = face.face_frame.rank();
  a.frame_basis = face.face_frame.basis();
  a.poly = shift_to_origin(to_frame(f_face, face.face_frame));
  a.m = 1;
  a.chi = signed_by_parity(face.dim - 1, face.nvol_face);
  return {true, a};
}

Int euler_atom(const AtomicClass& a) { return a.chi; }

Int euler_from_volume(const AtomicClass& a) {
  if (a.kind == AtomKind::Point) return 1;
  const std::vector<LatticePoint> pts = a.poly.support();
  if (pts.empty()) return 0;
  const int r = static_cast<int>(a.torus_rank);
  if (affine_dimension(pts) < r) return 0;  // a torus factor splits off
  return signed_by_parity(r - 1, normalized_volume(pts));
}

Int euler_specialize(const MotivicElement& e) {
  Int s = 0;
  for (const auto& t : e.terms) s += lpoly_at_one(t.coeff) * euler_atom(t.atom);
  return s;
}

// ---- zeta

ZetaFunction& ZetaFunction::operator*=(const ZetaFunction& other) {
  for (const auto& [m, k] : other.factors) {
    Int& slot = factors[m];
    slot += k;
    if (slot == 0) factors.erase(m);
  }
  return *this;
}

ZetaFunction ZetaFunction::pow(const Int& k) const {
  ZetaFunction r;
  if (k == 0) return r;
  for (const auto& [m, x] : factors) r.factors[m] = x * k;
  return r;
}

Int ZetaFunction::degree() const {
  Int d = 0;
  for (const auto& [m, k] : factors) d += m * k;
  return d;
}

// μ_m acts on a HypersurfaceOne atom by translation with a torus element of
// exact order m, so γ^k has no fixed points unless m | k, and the Lefschetz
// numbers are Λ(γ^k) = chi·[m | k]. Summing Λ(γ^k) t^k / k gives
// -(chi/m) log(1 - t^m).
ZetaFunction zeta_atom(const AtomicClass& a) {
  ZetaFunction z;
  if (a.chi == 0) return z;
  if (a.chi % a.m != 0) {
    throw ActionOrderError("action order " + a.m.get_str() + " does not divide chi = " + a.chi.get_str() + " for " +
                           a.provenance);
  }
  z.factors[a.m] = -a.chi / a.m;
  return z;
}

ZetaFunction zeta_specialize(const MotivicElement& e) {
  ZetaFunction z;
  for (const auto& t : e.terms) z *= zeta_atom(t.atom).pow(lpoly_at_one(t.coeff));
  return z;
}

}  // namespace nmotive
