#include "nmotive/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "nmotive/errors.hpp"

namespace nmotive {

void LaurentPolynomial::add_term(const LatticePoint& exponent, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

std::vector<LatticePoint> LaurentPolynomial::support() const {
  std::vector<LatticePoint> s;
  s.reserve(terms.size());
  for (const auto& [u, c] : terms) s.push_back(u);
  return s;
}

namespace {

Rat power(const Rat& x, const Int& k) {
  Rat base = k < 0 ? Rat(1 / x) : x;
  unsigned long e = Int(abs(k)).get_ui();
  Rat r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string format_rat(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace

Rat LaurentPolynomial::evaluate(const std::vector<Rat>& x) const {
  Rat s = 0;
  for (const auto& [u, c] : terms) {
    Rat t = c;
    for (std::size_t i = 0; i < rank; ++i) {
      if (u[i] != 0) t *= power(x[i], u[i]);
    }
    s += t;
  }
  return s;
}

LaurentPolynomial LaurentPolynomial::log_derivative(std::size_t i) const {
  LaurentPolynomial d(rank);
  for (const auto& [u, c] : terms) d.add_term(u, c * Rat(u[i]));
  return d;
}

std::string LaurentPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [u, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < rank; ++i) {
      if (u[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (u[i] != 1) mono += "^" + u[i].get_str();
    }
    const bool negative = c < 0;
    const Rat a = abs(c);
    std::string body;
    if (mono.empty()) {
      body = format_rat(a);
    } else if (a == 1) {
      body = mono;
    } else {
      body = format_rat(a) + "*" + mono;
    }
    if (first) {
      out += (negative ? "-" : "") + body;
    } else {
      out += (negative ? "-" : "+") + body;
    }
    first = false;
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return names;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& declared)
      : s_(text), vars_(declared), infer_(declared.empty()) {}

  ParsedPolynomial run() {
    std::vector<std::pair<std::map<std::size_t, Int>, Rat>> raw;
    skip_ws();
    if (at_end()) throw SyntaxError("empty expression", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      Rat sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
      raw.push_back(term());
      raw.back().second *= sign;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    ParsedPolynomial out;
    out.variables = vars_;
    out.poly = LaurentPolynomial(vars_.size());
    for (const auto& [powers, coeff] : raw) {
      LatticePoint u = zero_point(vars_.size());
      for (const auto& [i, k] : powers) u[i] += k;
      out.poly.add_term(u, coeff);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Int integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an integer", start);
    return Int(s_.substr(start, pos_ - start));
  }

  std::size_t variable() {
    const std::size_t start = pos_;
    if (infer_) {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it != vars_.end()) return static_cast<std::size_t>(it - vars_.begin());
      vars_.push_back(name);
      return vars_.size() - 1;
    }
    std::size_t best = vars_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const std::string& v = vars_[i];
      if (v.size() > best_len && s_.compare(start, v.size(), v) == 0) {
        best = i;
        best_len = v.size();
      }
    }
    if (best == vars_.size()) {
      std::size_t end = start;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      throw UnknownVariable("unknown variable '" + s_.substr(start, end - start) + "' at position " +
                            std::to_string(start));
    }
    pos_ += best_len;
    return best;
  }

  std::pair<std::map<std::size_t, Int>, Rat> term() {
    std::map<std::size_t, Int> powers;
    Rat coeff = 1;
    bool any = false;
    while (true) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Rat(integer());
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t v = variable();
        Int k = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          Int sign = 1;
          if (peek() == '-' || peek() == '+') {
            if (peek() == '-') sign = -1;
            ++pos_;
            skip_ws();
          }
          k = sign * integer();
        }
        powers[v] += k;
      } else {
        throw SyntaxError(at_end() ? "unexpected end of input" : std::string("unexpected '") + c + "'", pos_);
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const Int q = integer();
        if (q == 0) throw SyntaxError("division by zero", at);
        coeff /= Rat(q);
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          continue;
        }
      }
      const char n = peek();
      if (std::isalnum(static_cast<unsigned char>(n))) continue;
      break;
    }
    if (!any) throw SyntaxError("empty term", pos_);
    coeff.canonicalize();
    return {powers, coeff};
  }

  const std::string& s_;
  std::vector<std::string> vars_;
  bool infer_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPolynomial parse(const std::string& text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const FaceData& face) {
  LaurentPolynomial r(f.rank);
  for (const auto& [u, c] : f.terms) {
    if (std::binary_search(face.support.begin(), face.support.end(), u)) r.add_term(u, c);
  }
  return r;
}

LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const Polytope& hull, const PolytopeFace& face) {
  LaurentPolynomial r(f.rank);
  for (const auto& [u, c] : f.terms) {
    if (hull.on_face(face, u)) r.add_term(u, c);
  }
  return r;
}

LaurentPolynomial to_frame(const LaurentPolynomial& f, const AffineLatticeFrame& frame) {
  LaurentPolynomial g(frame.rank());
  for (const auto& [u, c] : f.terms) g.add_term(frame.coordinates(u), c);
  return g;
}

LaurentPolynomial shift_to_origin(const LaurentPolynomial& f) {
  if (f.terms.empty()) return f;
  LatticePoint low = f.terms.begin()->first;
  for (const auto& [u, c] : f.terms) {
    for (std::size_t i = 0; i < f.rank; ++i) low[i] = std::min(low[i], u[i]);
  }
  LaurentPolynomial g(f.rank);
  for (const auto& [u, c] : f.terms) g.add_term(sub(u, low), c);
  return g;
}

Convenience is_convenient(const LaurentPolynomial& f, const Cone& sigma_dual) {
  if (f.rank != sigma_dual.ambient_rank()) {
    throw DimensionMismatch("polynomial of rank " + std::to_string(f.rank) + " against a cone of rank " +
                            std::to_string(sigma_dual.ambient_rank()));
  }
  for (const auto& [u, c] : f.terms) {
    if (!sigma_dual.contains(u)) throw SupportOutsideCone(to_string(u) + " lies outside sigma-dual");
  }
  Convenience out;
  for (const auto& ray : sigma_dual.generators()) {
    const bool hit = std::any_of(f.terms.begin(), f.terms.end(), [&](const auto& term) {
      const LatticePoint& u = term.first;
      return !is_zero(u) && primitive(u) == ray;
    });
    if (!hit) out.missing_rays.push_back(ray);
  }
  out.convenient = out.missing_rays.empty();
  return out;
}

WeightedHomogeneity weighted_homogeneity(const LaurentPolynomial& f) {
  const std::size_t n = f.rank;
  RatMatrix a;
  for (const auto& [u, c] : f.terms) {
    std::vector<Rat> row(u.begin(), u.end());
    row.emplace_back(1);
    a.push_back(std::move(row));
  }
  WeightedHomogeneity out;
  const std::vector<std::size_t> pivots = row_reduce(a);
  if (!pivots.empty() && pivots.back() == n) return out;  // inconsistent
  if (pivots.size() < n) {
    out.status = WeightedHomogeneity::Status::NonUnique;
    return out;
  }
  out.status = WeightedHomogeneity::Status::Homogeneous;
  out.ell.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.ell[pivots[i]] = a[i][n];
  Int l = 1;
  for (const auto& q : out.ell) l = lcm(l, Int(q.get_den()));
  Int g = 0;
  for (const auto& q : out.ell) g = gcd(g, Int(q.get_num() * (l / q.get_den())));
  out.e = l / g;
  return out;
}

}  // namespace nmotive
