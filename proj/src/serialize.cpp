#include "nmotive/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "nmotive/errors.hpp"

namespace nmotive {

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw DimensionMismatch("expected an integer, got " + j.dump());
}

Json point_json(const LatticePoint& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(int_json(x));
  return a;
}

LatticePoint point_from_json(const Json& j) {
  if (!j.is_array()) throw DimensionMismatch("expected an integer list, got " + j.dump());
  LatticePoint p;
  for (const auto& x : j) p.push_back(int_from_json(x));
  return p;
}

Json points_json(const std::vector<LatticePoint>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

namespace {

Json rat_json(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return Json(c.get_str());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw DimensionMismatch("expected a rational string, got " + j.dump());
  const std::string text = j.get<std::string>();
  Rat q;
  try {
    q = Rat(text);
  } catch (const std::invalid_argument&) {
    throw SyntaxError("bad rational '" + text + "'", 0);
  }
  if (q.get_den() == 0) throw SyntaxError("zero denominator in '" + text + "'", 0);
  q.canonicalize();
  return q;
}

}  // namespace

Json poly_json(const LaurentPolynomial& f) {
  Json a = Json::array();
  for (const auto& [u, c] : f.terms) a.push_back(Json{{"coeff", rat_json(c)}, {"exponents", point_json(u)}});
  return a;
}

LaurentPolynomial poly_from_json(const Json& j, std::size_t rank) {
  LaurentPolynomial f(rank);
  for (const auto& t : j) {
    LatticePoint u = point_from_json(t.at("exponents"));
    if (u.size() != rank) throw DimensionMismatch("term rank differs from torus rank");
    f.add_term(u, rat_from_json(t.at("coeff")));
  }
  return f;
}

Json atom_json(const AtomicClass& a) {
  return Json{{"kind", to_string(a.kind)},
              {"torus_rank", a.torus_rank},
              {"m", int_json(a.m)},
              {"chi", int_json(a.chi)},
              {"poly", poly_json(a.poly)},
              {"provenance", a.provenance}};
}

AtomicClass atom_from_json(const Json& j) {
  AtomicClass a;
  a.kind = atom_kind_from_string(j.at("kind").get<std::string>());
  a.torus_rank = j.at("torus_rank").get<std::size_t>();
  a.m = int_from_json(j.at("m"));
  a.chi = int_from_json(j.at("chi"));
  a.poly = poly_from_json(j.at("poly"), a.torus_rank);
  a.provenance = j.value("provenance", "");
  return a;
}

Json element_json(const MotivicElement& e) {
  Json a = Json::array();
  for (const auto& t : e.terms) {
    Json coeff = Json::array();
    for (const auto& [power, c] : t.coeff) coeff.push_back(Json::array({power, int_json(c)}));
    a.push_back(Json{{"coeff_in_L", coeff}, {"atom", atom_json(t.atom)}});
  }
  return a;
}

MotivicElement motivic_element_from_json(const Json& j) {
  MotivicElement e;
  for (const auto& t : j) {
    LPoly p;
    for (const auto& pc : t.at("coeff_in_L")) p[pc.at(0).get<int>()] += int_from_json(pc.at(1));
    e.add(lpoly_add(p, {}), atom_from_json(t.at("atom")));
  }
  return canonicalize(e);
}

Json zeta_json(const ZetaFunction& z) {
  Json factors = Json::object();
  for (const auto& [m, k] : z.factors) factors[m.get_str()] = int_json(k);
  return Json{{"factors", factors}};
}

ZetaFunction zeta_from_json(const Json& j) {
  ZetaFunction z;
  for (const auto& [m, k] : j.at("factors").items()) {
    const Int e = int_from_json(k);
    if (e != 0) z.factors[Int(m)] = e;
  }
  return z;
}

Json face_json(const FaceData& face) {
  return Json{{"vertices", points_json(face.vertices)},
              {"dim", face.dim},
              {"tau", points_json(face.tau.generators())},
              {"c", face.c},
              {"m", int_json(face.m)},
              {"ell", point_json(face.ell.coeffs)},
              {"nvol_face", int_json(face.nvol_face)},
              {"nvol_hat", int_json(face.nvol_hat)}};
}

namespace {

Json rats_json(const std::vector<Rat>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(rat_json(x));
  return a;
}

std::string rats_text(const std::vector<Rat>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + rat_json(xs[i]).get<std::string>();
  return s + ")";
}

std::string face_text(const std::vector<LatticePoint>& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) s += (i ? "," : "") + to_string(face[i]);
  return s + "}";
}

}  // namespace

Json verdict_json(const NondegeneracyVerdict& v) {
  Json a = Json::array();
  for (const auto& f : v.faces) {
    Json o{{"face", points_json(f.face)}, {"dim", f.dim}, {"status", to_string(f.status)}};
    if (f.status == FaceStatus::ProvenDegenerate) o["witness"] = rats_json(f.witness);
    if (!f.certificate.empty()) o["certificate"] = f.certificate;
    if (!f.primes_tested.empty()) o["primes_tested"] = f.primes_tested;
    a.push_back(std::move(o));
  }
  return a;
}

Json error_json(const ReportError& e) {
  Json o{{"kind", e.kind}, {"message", e.message}};
  if (e.kind == "NotConvenient") o["missing_rays"] = points_json(e.missing_rays);
  if (e.kind == "Degenerate") {
    o["face"] = points_json(e.face);
    o["witness"] = rats_json(e.witness);
    o["certificate"] = e.certificate;
  }
  return o;
}

Json report_json(const AnalysisReport& r) {
  Json o = Json::object();
  if (r.convenient) {
    o["convenient"] = *r.convenient;
    o["missing_rays"] = points_json(r.missing_rays);
  }
  Json faces = Json::array();
  for (const auto& f : r.faces) faces.push_back(face_json(f));
  o["faces"] = faces;
  if (r.nondegeneracy) o["nondegeneracy"] = verdict_json(*r.nondegeneracy);
  if (r.psi_local) o["psi_local"] = element_json(*r.psi_local);
  if (r.euler) o["euler"] = int_json(*r.euler);
  if (r.milnor) o["milnor"] = int_json(*r.milnor);
  if (r.zeta) o["zeta"] = zeta_json(*r.zeta);

  Json oracles = Json::object();
  if (r.kouchnirenko) {
    oracles["kouchnirenko_mu"] = int_json(*r.kouchnirenko);
    if (r.milnor) oracles["kouchnirenko_match"] = *r.kouchnirenko == *r.milnor;
  }
  if (r.zeta_direct) {
    oracles["zeta_direct"] = zeta_json(*r.zeta_direct);
    if (r.zeta) oracles["zeta_paths_match"] = *r.zeta_direct == *r.zeta;
  }
  if (r.wh_euler) oracles["wh_euler"] = int_json(*r.wh_euler);
  if (r.wh_zeta) oracles["wh_zeta"] = zeta_json(*r.wh_zeta);
  if (r.wh_euler && r.wh_zeta && r.euler && r.zeta) {
    oracles["wh_match"] = *r.wh_euler == *r.euler && *r.wh_zeta == *r.zeta;
  }
  if (r.degree_identity) oracles["degree_identity"] = *r.degree_identity;
  if (r.psi_local) oracles["match"] = r.oracles_agree();
  o["oracles"] = oracles;

  o["warnings"] = r.warnings;
  Json errors = Json::array();
  for (const auto& e : r.errors) errors.push_back(error_json(e));
  o["errors"] = errors;
  return o;
}

std::string zeta_text(const ZetaFunction& z) {
  std::vector<std::string> parts;
  auto factor = [](const Int& m, const Int& k) {
    std::string s = m == 1 ? "(1-t)" : "(1-t^" + m.get_str() + ")";
    if (k != 1) s += "^" + k.get_str();
    return s;
  };
  for (const auto& [m, k] : z.factors) {
    if (k > 0) parts.push_back(factor(m, k));
  }
  for (const auto& [m, k] : z.factors) {
    if (k < 0) parts.push_back(factor(m, k));
  }
  if (parts.empty()) return "1";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " * " + parts[i];
  return s;
}

std::string lpoly_text(const LPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [power, c] = *it;
    const Int a = abs(c);
    std::string mono = power == 0 ? "" : (power == 1 ? "L" : "L^" + std::to_string(power));
    std::string body = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
    if (first) {
      s += (c < 0 ? "-" : "") + body;
    } else {
      s += (c < 0 ? "-" : "+") + body;
    }
    first = false;
  }
  return s;
}

std::string atom_text(const AtomicClass& a, const std::vector<std::string>& names) {
  const std::string action = a.m == 1 ? "" : "; mu_" + a.m.get_str();
  if (a.kind == AtomKind::Point) return "[pt" + action + "]";
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < a.torus_rank; ++j) {
    std::string name = "u" + std::to_string(j + 1);
    if (j < a.frame_basis.size()) {
      const LatticePoint& b = a.frame_basis[j];
      for (std::size_t i = 0; i < b.size() && i < names.size(); ++i) {
        if (b == unit_vector(b.size(), i)) name = names[i];
      }
    }
    vars.push_back(name);
  }
  return "[Z(" + a.poly.to_string(vars) + ") in T^" + std::to_string(a.torus_rank) + action + "]";
}

std::string element_text(const MotivicElement& e, const std::vector<std::string>& names) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const auto& t = e.terms[i];
    auto [k, q] = lpoly_split_one_minus_l(t.coeff);
    bool negative = false;
    std::string prefix;
    if (q.size() == 1) {
      const auto& [power, c] = *q.begin();
      negative = c < 0;
      LPoly mono{{power, abs(c)}};
      const std::string m = lpoly_text(mono);
      if (m != "1") prefix = m + "*";
    } else {
      prefix = "(" + lpoly_text(q) + ")*";
    }
    if (k > 0) prefix += "(1-L)^" + std::to_string(k) + "*";
    const std::string body = prefix + atom_text(t.atom, names);
    if (i == 0) {
      out += (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string verdict_text(const NondegeneracyVerdict& v) {
  std::ostringstream s;
  for (const auto& f : v.faces) {
    s << "face " << face_text(f.face) << " dim " << f.dim << ": " << to_string(f.status);
    if (f.status == FaceStatus::ProvenDegenerate && !f.witness.empty()) s << " witness " << rats_text(f.witness);
    if (!f.certificate.empty()) s << " [" << f.certificate << "]";
    if (!f.primes_tested.empty()) {
      s << " primes";
      for (long p : f.primes_tested) s << " " << p;
    }
    s << "\n";
  }
  return s.str();
}

std::string report_text(const AnalysisReport& r, const std::vector<std::string>& names) {
  std::ostringstream s;
  if (r.convenient) {
    s << "convenient: " << (*r.convenient ? "yes" : "no");
    for (const auto& ray : r.missing_rays) s << " missing " << to_string(ray);
    s << "\n";
  }
  s << "compact faces: " << r.faces.size() << "\n";
  if (r.nondegeneracy) s << verdict_text(*r.nondegeneracy);
  if (r.psi_local) s << "psi: " << element_text(*r.psi_local, names) << "\n";
  if (r.euler) s << "euler: " << r.euler->get_str() << "\n";
  if (r.milnor) s << "milnor: " << r.milnor->get_str() << "\n";
  if (r.zeta) s << "zeta: " << zeta_text(*r.zeta) << "\n";
  if (r.kouchnirenko) s << "kouchnirenko: " << r.kouchnirenko->get_str() << "\n";
  if (r.wh_euler) s << "wh euler: " << r.wh_euler->get_str() << "\n";
  if (r.wh_zeta) s << "wh zeta: " << zeta_text(*r.wh_zeta) << "\n";
  if (r.psi_local) s << "oracles agree: " << (r.oracles_agree() ? "yes" : "no") << "\n";
  for (const auto& w : r.warnings) s << "warning: " << w << "\n";
  for (const auto& e : r.errors) s << "error: " << e.kind << ": " << e.message << "\n";
  return s.str();
}

}  // namespace nmotive
