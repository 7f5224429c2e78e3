#include "nmotive/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "nmotive/errors.hpp"

namespace nmotive {

Int IntegralLinearForm::operator()(const LatticePoint& p) const { return dot(coeffs, p); }

Int dot(const LatticePoint& a, const LatticePoint& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticePoint scale(const LatticePoint& a, const Int& k) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

Int content(const LatticePoint& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(const LatticePoint& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

LatticePoint zero_point(std::size_t n) { return LatticePoint(n, Int(0)); }

LatticePoint unit_vector(std::size_t n, std::size_t i) {
  LatticePoint e(n, Int(0));
  e[i] = 1;
  return e;
}

LatticePoint make_point(std::initializer_list<long> coords) {
  LatticePoint p;
  p.reserve(coords.size());
  for (long c : coords) p.emplace_back(c);
  return p;
}

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s + ")";
}

LatticePoint primitive(const LatticePoint& v) {
  Int g = content(v);
  if (g == 0) throw ZeroVector("primitive() of the zero vector");
  LatticePoint r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::vector<std::size_t> row_reduce(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, LatticePoint(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::size_t rank(const IntMatrix& rows) {
  // Bareiss elimination with column pivoting over the integers.
  if (rows.empty()) return 0;
  IntMatrix a = rows;
  const std::size_t m = a.size(), n = a[0].size();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) a[i][j] = (a[i][j] * a[r][col] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

int affine_dimension(const std::vector<LatticePoint>& points) {
  if (points.empty()) return -1;
  IntMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return static_cast<int>(rank(diffs));
}

Int determinant(const IntMatrix& square) {
  // Bareiss fraction-free elimination.
  const std::size_t n = square.size();
  if (n == 0) return 1;
  IntMatrix a = square;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix hermite_normal_form(IntMatrix a) {
  if (a.empty()) return a;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        const Int q = floor_div(a[i][c], a[r][c]);
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= a.size() || a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& x : a[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(a[i][c], a[r][c]);
      if (q != 0) {
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
      }
    }
    ++r;
  }
  a.resize(r);
  return a;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  SmithForm s;
  const std::size_t m = input.size();
  const std::size_t n = m ? input[0].size() : 0;
  s.d = input;
  s.u = identity(m);
  s.v = identity(n);
  s.v_inv = identity(n);
  auto& d = s.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
    std::swap(s.v_inv[i], s.v_inv[j]);
  };
  // row_i -= q * row_k
  auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] -= q * d[k][j];
    for (std::size_t j = 0; j < m; ++j) s.u[i][j] -= q * s.u[k][j];
  };
  // col_j -= q * col_k
  auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {
    for (std::size_t i = 0; i < m; ++i) d[i][j] -= q * d[i][k];
    for (std::size_t i = 0; i < n; ++i) s.v[i][j] -= q * s.v[i][k];
    for (std::size_t i = 0; i < n; ++i) s.v_inv[k][i] += q * s.v_inv[j][i];
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (d[i][j] != 0 && (bi == m || abs(d[i][j]) < abs(d[bi][bj]))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == m) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        row_op(i, t, floor_div(d[i][t], d[t][t]));
        if (d[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        col_op(j, t, floor_div(d[t][j], d[t][t]));
        if (d[t][j] != 0) dirty = true;
      }
      if (dirty) {
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d[i][t] != 0 && abs(d[i][t]) < abs(d[bi2][bj2])) {
            bi2 = i;
            bj2 = t;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d[t][j] != 0 && abs(d[t][j]) < abs(d[bi2][bj2])) {
            bi2 = t;
            bj2 = j;
          }
        }
        swap_rows(t, bi2);
        swap_cols(t, bj2);
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      row_op(t, bad, Int(-1));
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
    s.invariants.push_back(d[t][t]);
  }
  return s;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols) {
  if (a.empty()) return identity(ncols);
  SmithForm s = smith_normal_form(a);
  const std::size_t r = s.invariants.size();
  IntMatrix kernel;
  for (std::size_t j = r; j < ncols; ++j) {
    LatticePoint col(ncols);
    for (std::size_t i = 0; i < ncols; ++i) col[i] = s.v[i][j];
    kernel.push_back(std::move(col));
  }
  return hermite_normal_form(kernel);
}

AffineLatticeFrame::AffineLatticeFrame(LatticePoint base, IntMatrix basis)
    : base_(std::move(base)), basis_(std::move(basis)) {
  if (basis_.empty()) {
    v_ = identity(base_.size());
    return;
  }
  SmithForm s = smith_normal_form(basis_);
  if (s.invariants.size() != basis_.size() ||
      !std::all_of(s.invariants.begin(), s.invariants.end(), [](const Int& x) { return x == 1; })) {
    throw DimensionMismatch("frame basis is not a basis of a saturated sublattice");
  }
  u_ = std::move(s.u);
  v_ = std::move(s.v);
}

LatticePoint AffineLatticeFrame::point(const LatticePoint& coords) const {
  LatticePoint p = base_;
  for (std::size_t j = 0; j < basis_.size(); ++j) p = add(p, scale(basis_[j], coords[j]));
  return p;
}

bool AffineLatticeFrame::contains(const LatticePoint& p) const {
  const LatticePoint q = sub(p, base_);
  const std::size_t d = rank();
  const std::size_t n = ambient_rank();
  // q = y B  <=>  q V = (y U^{-1}) [I | 0]
  for (std::size_t j = d; j < n; ++j) {
    Int z = 0;
    for (std::size_t i = 0; i < n; ++i) z += q[i] * v_[i][j];
    if (z != 0) return false;
  }
  return true;
}

LatticePoint AffineLatticeFrame::coordinates(const LatticePoint& p) const {
  const LatticePoint q = sub(p, base_);
  const std::size_t d = rank();
  const std::size_t n = ambient_rank();
  LatticePoint z(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += q[i] * v_[i][j];
    z[j] = acc;
  }
  for (std::size_t j = d; j < n; ++j) {
    if (z[j] != 0) throw NotInLattice(to_string(p) + " is not in the frame lattice");
  }
  LatticePoint y(d, Int(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) y[k] += z[i] * u_[i][k];
  }
  return y;
}

LatticePoint AffineLatticeFrame::lift_form(const LatticePoint& frame_form) const {
  // B w = a  with  B = U^{-1} [I | 0] V^{-1}:  w = V (U a, 0).
  const std::size_t d = rank();
  const std::size_t n = ambient_rank();
  LatticePoint z(n, Int(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) z[i] += u_[i][k] * frame_form[k];
  }
  LatticePoint w(n, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) w[i] += v_[i][j] * z[j];
  }
  return w;
}

AffineLatticeFrame saturated_basis(const std::vector<LatticePoint>& points) {
  assert(!points.empty());
  const LatticePoint& base = points.front();
  const std::size_t n = base.size();
  IntMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    LatticePoint d = sub(points[i], base);
    if (!is_zero(d)) diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return AffineLatticeFrame(base, {});
  // Row lattice L = rows of S * V^{-1}; its saturation is spanned by the
  // first rank(S) rows of V^{-1}.
  SmithForm s = smith_normal_form(hermite_normal_form(diffs));
  IntMatrix basis(s.v_inv.begin(), s.v_inv.begin() + static_cast<long>(s.invariants.size()));
  for (auto& row : basis) row.resize(n);
  return AffineLatticeFrame(base, hermite_normal_form(std::move(basis)));
}

bool is_saturated(const IntMatrix& basis) {
  if (basis.empty()) return true;
  SmithForm s = smith_normal_form(basis);
  return s.invariants.size() == basis.size() &&
         std::all_of(s.invariants.begin(), s.invariants.end(), [](const Int& x) { return x == 1; });
}

Int normalized_volume(const std::vector<LatticePoint>& points) {
  return normalized_volume(points, saturated_basis(points));
}

LatticeDistance lattice_distance(const std::vector<LatticePoint>& face) {
  assert(!face.empty());
  const std::size_t n = face.front().size();
  std::vector<LatticePoint> with_origin;
  with_origin.push_back(zero_point(n));
  with_origin.insert(with_origin.end(), face.begin(), face.end());
  AffineLatticeFrame frame = saturated_basis(with_origin);
  const std::size_t d = frame.rank();
  if (d != static_cast<std::size_t>(affine_dimension(face)) + 1) {
    throw OriginInSpan("the affine span of the face contains the origin");
  }
  std::vector<LatticePoint> coords;
  coords.reserve(face.size());
  for (const auto& p : face) coords.push_back(frame.coordinates(p));
  // The form vanishes on differences inside the face.
  IntMatrix diffs;
  for (std::size_t i = 1; i < coords.size(); ++i) diffs.push_back(sub(coords[i], coords[0]));
  IntMatrix ker = integer_kernel(diffs, d);
  assert(ker.size() == 1);
  LatticePoint ell = primitive(ker.front());
  Int value = dot(ell, coords.front());
  if (value < 0) {
    for (auto& x : ell) x = -x;
    value = -value;
  }
  return LatticeDistance{value, IntegralLinearForm{ell, true}, std::move(frame)};
}

}  // namespace nmotive
