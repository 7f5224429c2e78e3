#include "nmotive/nondegeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>

#include "nmotive/errors.hpp"

namespace nmotive {

std::string to_string(FaceStatus s) {
  switch (s) {
    case FaceStatus::ExactNondegenerate:
      return "ExactNondegenerate";
    case FaceStatus::ProvenDegenerate:
      return "ProvenDegenerate";
    case FaceStatus::LikelyNondegenerate:
      return "LikelyNondegenerate";
    case FaceStatus::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

const FaceVerdict* NondegeneracyVerdict::first_degenerate() const {
  for (const auto& f : faces) {
    if (f.status == FaceStatus::ProvenDegenerate) return &f;
  }
  return nullptr;
}

bool NondegeneracyVerdict::all_exact() const {
  return std::all_of(faces.begin(), faces.end(),
                     [](const FaceVerdict& f) { return f.status == FaceStatus::ExactNondegenerate; });
}

bool NondegeneracyVerdict::has(FaceStatus s) const {
  return std::any_of(faces.begin(), faces.end(), [&](const FaceVerdict& f) { return f.status == s; });
}

const std::vector<long>& default_primes() {
  static const std::vector<long> primes{101, 103, 107};
  return primes;
}

bool verify_witness(const LaurentPolynomial& f, const std::vector<Rat>& x) {
  if (x.size() != f.rank) return false;
  if (std::any_of(x.begin(), x.end(), [](const Rat& v) { return v == 0; })) return false;
  for (std::size_t i = 0; i < f.rank; ++i) {
    if (f.log_derivative(i).evaluate(x) != 0) return false;
  }
  return true;
}

namespace {

// Univariate polynomials over Q, coefficients in increasing degree, no
// trailing zeros.
using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rat(static_cast<long>(k)));
  trim(d);
  return d;
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

UPoly monic_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rat evaluate(const UPoly& p, const Rat& x) {
  Rat s = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
  return s;
}

std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Nonzero rational roots, by the rational root test on an integral multiple.
std::vector<Rat> rational_roots(const UPoly& p) {
  std::vector<Rat> roots;
  if (p.size() < 2) return roots;
  Int l = 1;
  for (const auto& c : p) l = lcm(l, Int(c.get_den()));
  std::vector<Int> a;
  for (const auto& c : p) a.push_back(Int(c.get_num() * (l / c.get_den())));
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  const Int a0 = a[low];
  const Int an = a.back();
  // Divisor enumeration is by trial division; give up on huge constants.
  if (abs(a0) > Int("1000000000000") || abs(an) > Int("1000000000000")) return roots;
  for (const auto& num : divisors(a0)) {
    for (const auto& den : divisors(an)) {
      for (int sign : {1, -1}) {
        Rat r(num * sign, den);
        r.canonicalize();
        if (evaluate(p, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string upoly_string(const UPoly& p) {
  LaurentPolynomial q(1);
  for (std::size_t k = 0; k < p.size(); ++k) q.add_term(make_point({static_cast<long>(k)}), p[k]);
  return q.to_string({"s"});
}

Rat rat_power(const Rat& x, const Int& k) {
  Rat r = 1;
  const Rat base = k < 0 ? Rat(1 / x) : x;
  for (Int i = 0; i < abs(k); ++i) r *= base;
  return r;
}

// Torus point x with x^{b_j} = y_j for the frame basis b_j.
std::vector<Rat> lift_point(const AffineLatticeFrame& frame, const std::vector<Rat>& y) {
  const std::size_t n = frame.ambient_rank();
  std::vector<Rat> x(n, Rat(1));
  for (std::size_t j = 0; j < frame.rank(); ++j) {
    const LatticePoint v = frame.lift_form(unit_vector(frame.rank(), j));
    for (std::size_t i = 0; i < n; ++i) x[i] *= rat_power(y[j], v[i]);
  }
  return x;
}

FaceVerdict check_edge(const LaurentPolynomial& f_face, const std::vector<LatticePoint>& vertices) {
  FaceVerdict out;
  out.face = vertices;
  out.dim = 1;
  const AffineLatticeFrame frame = saturated_basis(vertices);
  const LaurentPolynomial g = shift_to_origin(to_frame(f_face, frame));
  UPoly p;
  for (const auto& [k, c] : g.terms) {
    const std::size_t deg = k[0].get_ui();
    if (p.size() <= deg) p.resize(deg + 1);
    p[deg] = c;
  }
  const UPoly h = monic_gcd(p, derivative(p));
  if (h.size() <= 1) {
    out.status = FaceStatus::ExactNondegenerate;
    return out;
  }
  out.status = FaceStatus::ProvenDegenerate;
  out.certificate = "gcd(p,p') = " + upoly_string(h) + " for p = " + upoly_string(p);
  for (const auto& r : rational_roots(h)) {
    std::vector<Rat> x = lift_point(frame, {r});
    if (verify_witness(f_face, x)) {
      out.witness = std::move(x);
      break;
    }
  }
  return out;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t reduce(const Int& v, std::int64_t p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

constexpr double kScanLimit = 2e7;
constexpr std::size_t kLiftAttempts = 64;

FaceVerdict check_higher(const LaurentPolynomial& f_face, const std::vector<LatticePoint>& vertices, int dim,
                         const std::vector<long>& primes) {
  FaceVerdict out;
  out.face = vertices;
  out.dim = dim;
  const AffineLatticeFrame frame = saturated_basis(vertices);
  const LaurentPolynomial g = to_frame(f_face, frame);
  const std::size_t d = frame.rank();
  std::vector<LatticePoint> exps;
  std::vector<Rat> coeffs;
  for (const auto& [k, c] : g.terms) {
    exps.push_back(k);
    coeffs.push_back(c);
  }

  std::vector<long> zero_primes;
  for (long prime : primes) {
    const std::int64_t p = prime;
    if (std::pow(static_cast<double>(p - 1), static_cast<double>(d)) > kScanLimit) continue;
    const bool usable = std::all_of(coeffs.begin(), coeffs.end(), [&](const Rat& c) { return reduce(Int(c.get_den()), p) != 0; });
    if (!usable) continue;
    out.primes_tested.push_back(prime);

    std::vector<std::int64_t> cmod;
    for (const auto& c : coeffs) {
      const std::int64_t num = reduce(Int(c.get_num()), p);
      const std::int64_t den = reduce(Int(c.get_den()), p);
      cmod.push_back(num * mod_pow(den, p - 2, p) % p);
    }
    std::vector<std::vector<std::int64_t>> emod(exps.size(), std::vector<std::int64_t>(d));
    std::vector<std::vector<std::int64_t>> kmod(exps.size(), std::vector<std::int64_t>(d));
    for (std::size_t t = 0; t < exps.size(); ++t) {
      for (std::size_t j = 0; j < d; ++j) {
        emod[t][j] = reduce(exps[t][j], p - 1);
        kmod[t][j] = reduce(exps[t][j], p);
      }
    }
    // pw[y][e] = y^e mod p
    std::vector<std::vector<std::int64_t>> pw(static_cast<std::size_t>(p), std::vector<std::int64_t>(p - 1));
    for (std::int64_t y = 1; y < p; ++y) {
      std::int64_t acc = 1;
      for (std::int64_t e = 0; e < p - 1; ++e) {
        pw[y][e] = acc;
        acc = acc * y % p;
      }
    }

    std::vector<std::int64_t> y(d, 1);
    std::vector<std::int64_t> mono(exps.size());
    std::size_t lifted_attempts = 0;
    bool zero_here = false;
    while (true) {
      std::int64_t gv = 0;
      for (std::size_t t = 0; t < exps.size(); ++t) {
        std::int64_t m = cmod[t];
        for (std::size_t j = 0; j < d; ++j) m = m * pw[y[j]][emod[t][j]] % p;
        mono[t] = m;
        gv += m;
      }
      if (gv % p == 0) {
        bool all = true;
        for (std::size_t j = 0; j < d && all; ++j) {
          std::int64_t s = 0;
          for (std::size_t t = 0; t < exps.size(); ++t) s = (s + mono[t] * kmod[t][j]) % p;
          all = s == 0;
        }
        if (all) {
          zero_here = true;
          if (lifted_attempts < kLiftAttempts) {
            ++lifted_attempts;
            std::vector<Rat> ry;
            for (std::size_t j = 0; j < d; ++j) ry.emplace_back(y[j] > p / 2 ? y[j] - p : y[j]);
            std::vector<Rat> x = lift_point(frame, ry);
            if (verify_witness(f_face, x)) {
              out.status = FaceStatus::ProvenDegenerate;
              out.witness = std::move(x);
              out.certificate = "common zero mod " + std::to_string(prime) + " lifts to Q";
              return out;
            }
          }
        }
      }
      std::size_t j = 0;
      while (j < d && ++y[j] == p) y[j++] = 1;
      if (j == d) break;
    }
    if (zero_here) zero_primes.push_back(prime);
  }

  if (!zero_primes.empty()) {
    out.status = FaceStatus::Inconclusive;
    out.certificate = "common zeros mod";
    for (long p : zero_primes) out.certificate += " " + std::to_string(p);
    out.certificate += " do not lift";
  } else if (out.primes_tested.empty()) {
    out.status = FaceStatus::Inconclusive;
    out.certificate = "no usable prime";
  } else {
    out.status = FaceStatus::LikelyNondegenerate;
  }
  return out;
}

}  // namespace

FaceVerdict check_face(const LaurentPolynomial& f_face, const std::vector<LatticePoint>& vertices,
                       const std::vector<long>& primes) {
  const int dim = affine_dimension(vertices);
  if (dim <= 0) {
    FaceVerdict out;
    out.face = vertices;
    out.dim = 0;
    out.status = FaceStatus::ExactNondegenerate;
    return out;
  }
  if (dim == 1) return check_edge(f_face, vertices);
  return check_higher(f_face, vertices, dim, primes);
}

NondegeneracyVerdict nondegeneracy_check(const LaurentPolynomial& f, const std::vector<FaceData>& faces,
                                         const std::vector<long>& primes, unsigned jobs) {
  NondegeneracyVerdict out;
  out.faces.resize(faces.size());
  auto one = [&](std::size_t i) { return check_face(restrict_to_face(f, faces[i]), faces[i].vertices, primes); };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < faces.size(); ++i) out.faces[i] = one(i);
    return out;
  }
  for (std::size_t start = 0; start < faces.size(); start += jobs) {
    std::vector<std::future<FaceVerdict>> batch;
    const std::size_t end = std::min(faces.size(), start + jobs);
    for (std::size_t i = start; i < end; ++i) batch.push_back(std::async(std::launch::async, one, i));
    for (std::size_t i = start; i < end; ++i) out.faces[i] = batch[i - start].get();
  }
  return out;
}

}  // namespace nmotive
