#include "nmotive/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "nmotive/errors.hpp"
#include "nmotive/fuzz.hpp"
#include "nmotive/pipeline.hpp"
#include "nmotive/serialize.hpp"

namespace nmotive {

namespace {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error("UsageError", ErrorClass::Input, message) {}
};

struct Job {
  std::string command;
  std::string poly;
  std::string poly_file;
  std::string vars;
  std::string cone;
  std::string format = "json";
  std::string primes;
  bool strict = false;
  unsigned jobs = 1;
  int fuzz = 0;
  std::uint64_t seed = 1;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Options make_options(const Job& job) {
  Options o;
  o.strict = job.strict;
  o.jobs = job.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : job.jobs;
  if (!job.primes.empty()) {
    o.primes.clear();
    for (const auto& s : split_list(job.primes)) {
      long p = 0;
      try {
        std::size_t used = 0;
        p = std::stol(s, &used);
        if (used != s.size()) p = 0;
      } catch (const std::exception&) {
        p = 0;
      }
      if (p < 3 || !is_prime(p)) throw UsageError("--primes expects odd primes, got '" + s + "'");
      o.primes.push_back(p);
    }
  }
  return o;
}

std::string read_poly_text(const Job& job, std::istream& in) {
  const bool inline_poly = !job.poly.empty();
  const bool file_poly = !job.poly_file.empty();
  if (inline_poly == file_poly) throw UsageError("give exactly one of --poly and --poly-file");
  if (file_poly) {
    std::ifstream f(job.poly_file);
    if (!f) throw UsageError("cannot read " + job.poly_file);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  if (job.poly == "-") return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return job.poly;
}

Cone make_cone(const Job& job, std::size_t n) {
  if (job.cone.empty()) return Cone::orthant(n);
  Json j;
  try {
    j = Json::parse(job.cone);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("--cone is not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw UsageError("--cone expects a nonempty JSON list of rays");
  std::vector<LatticePoint> rays;
  for (const auto& r : j) {
    LatticePoint p = point_from_json(r);
    if (p.size() != n) throw DimensionMismatch("ray " + r.dump() + " has rank " + std::to_string(p.size()) +
                                               ", expected " + std::to_string(n));
    rays.push_back(std::move(p));
  }
  Cone c(rays, n);
  if (!c.is_strictly_convex() || !c.is_full_dimensional()) {
    throw ConeNotStrictlyConvex("--cone must span a strictly convex full-dimensional cone");
  }
  return c;
}

// [{"coeff": "p/q", "exponents": [...]}, ...]
ParsedPolynomial parse_terms(const std::string& text, std::vector<std::string> names) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("polynomial terms are not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw UsageError("polynomial terms must be a nonempty JSON list");
  ParsedPolynomial out;
  try {
    const std::size_t n = j.at(0).at("exponents").size();
    for (const auto& t : j) {
      if (t.at("exponents").size() != n) throw DimensionMismatch("terms of different ranks");
    }
    out.poly = poly_from_json(j, n);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed polynomial terms: ") + e.what());
  }
  if (names.empty()) names = default_variable_names(out.poly.rank);
  if (names.size() != out.poly.rank) {
    throw DimensionMismatch(std::to_string(names.size()) + " variable names for rank " +
                            std::to_string(out.poly.rank));
  }
  out.variables = std::move(names);
  return out;
}

struct Input {
  ParsedPolynomial parsed;
  GermInput germ;
};

Input read_input(const Job& job, std::istream& in) {
  Input input;
  const std::string text = read_poly_text(job, in);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    input.parsed = parse_terms(text, split_list(job.vars));
  } else {
    input.parsed = parse(text, split_list(job.vars));
  }
  const std::size_t n = input.parsed.variables.size();
  if (n == 0) throw DimensionMismatch("the polynomial has no variables");
  input.germ = GermInput{input.parsed.poly, make_cone(job, n), make_options(job)};
  return input;
}

Json envelope(const Job& job) { return Json{{"schema_version", kSchemaVersion}, {"command", job.command}}; }

Json envelope(const Job& job, const Input& input) {
  Json o = envelope(job);
  o["variables"] = input.parsed.variables;
  o["cone"] = points_json(input.germ.sigma_dual.generators());
  return o;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::Input:
      return 2;
    case ErrorClass::Precondition:
      return 3;
    case ErrorClass::Internal:
      return 1;
  }
  return 1;
}

int cmd_analyze(const Job& job, std::istream& in, std::ostream& out) {
  const Input input = read_input(job, in);
  const AnalysisReport r = analyze(input.germ);
  if (job.format == "text") {
    out << report_text(r, input.parsed.variables);
  } else {
    Json o = envelope(job, input);
    o.update(report_json(r));
    emit(out, o);
  }
  int code = 0;
  for (const auto& e : r.errors) code = std::max(code, e.error_class == ErrorClass::Internal ? 1 : 3);
  if (code == 3 && std::any_of(r.errors.begin(), r.errors.end(), [](const ReportError& e) {
        return e.error_class == ErrorClass::Internal;
      })) {
    code = 1;
  }
  return code;
}

int cmd_motivic(const Job& job, std::istream& in, std::ostream& out, std::ostream& err) {
  const Input input = read_input(job, in);
  const MilnorFibre mf = motivic_milnor_fibre(input.germ);
  for (const auto& w : mf.warnings) err << "warning: " << w << "\n";
  if (job.format == "text") {
    out << element_text(mf.psi, input.parsed.variables) << "\n";
  } else {
    Json o = envelope(job, input);
    o["psi_local"] = element_json(mf.psi);
    o["warnings"] = mf.warnings;
    emit(out, o);
  }
  return 0;
}

int cmd_number(const Job& job, std::istream& in, std::ostream& out, std::ostream& err) {
  const Input input = read_input(job, in);
  Int value;
  std::vector<std::string> warnings;
  if (job.command == "oracle-mu") {
    value = kouchnirenko_mu(input.germ);
  } else {
    const MilnorFibre mf = motivic_milnor_fibre(input.germ);
    warnings = mf.warnings;
    const Int euler = euler_specialize(mf.psi);
    value = job.command == "euler" ? euler : milnor_from_euler(euler, input.germ.f.rank);
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  if (job.format == "text") {
    out << value.get_str() << "\n";
  } else {
    Json o = envelope(job, input);
    const std::string key = job.command == "oracle-mu" ? "kouchnirenko_mu" : job.command;
    o[key] = int_json(value);
    o["warnings"] = warnings;
    emit(out, o);
  }
  return 0;
}

int cmd_zeta(const Job& job, std::istream& in, std::ostream& out) {
  const Input input = read_input(job, in);
  const ZetaFunction z = monodromy_zeta(input.germ);
  if (job.format == "text") {
    out << zeta_text(z) << "\n";
  } else {
    Json o = envelope(job, input);
    o["zeta"] = zeta_json(z);
    emit(out, o);
  }
  return 0;
}

int cmd_check_ndg(const Job& job, std::istream& in, std::ostream& out) {
  const Input input = read_input(job, in);
  const NewtonPolyhedron np = newton_polyhedron(input.germ.f.support(), input.germ.sigma_dual);
  const std::vector<FaceData> faces = compact_faces(np);
  const NondegeneracyVerdict v =
      nondegeneracy_check(input.germ.f, faces, input.germ.options.primes, input.germ.options.jobs);
  if (job.format == "text") {
    out << verdict_text(v);
  } else {
    Json o = envelope(job, input);
    o["nondegeneracy"] = verdict_json(v);
    emit(out, o);
  }
  return 0;
}

int cmd_wh(const Job& job, std::istream& in, std::ostream& out) {
  const Input input = read_input(job, in);
  const WhDecomposition wh = wh_decomposition(input.germ.f, input.germ.options);
  const auto& names = input.parsed.variables;
  if (job.format == "text") {
    out << "weights:";
    for (const auto& q : wh.weights.ell) out << " " << Rat(q).get_str();
    out << " e = " << wh.weights.e.get_str() << "\n";
    out << "psi_global: " << element_text(wh.psi_global, names) << "\n";
    out << "psi_local: " << element_text(wh.psi_local, names) << "\n";
    out << "euler_local: " << euler_specialize(wh.psi_local).get_str() << "\n";
    out << "zeta_local: " << zeta_text(zeta_specialize(wh.psi_local)) << "\n";
  } else {
    Json o = envelope(job, input);
    Json ell = Json::array();
    for (const auto& q : wh.weights.ell) ell.push_back(Rat(q).get_str());
    o["weights"] = Json{{"ell", ell}, {"e", int_json(wh.weights.e)}};
    o["psi_global"] = element_json(wh.psi_global);
    o["psi_local"] = element_json(wh.psi_local);
    o["euler_global"] = int_json(euler_specialize(wh.psi_global));
    o["euler_local"] = int_json(euler_specialize(wh.psi_local));
    o["zeta_global"] = zeta_json(zeta_specialize(wh.psi_global));
    o["zeta_local"] = zeta_json(zeta_specialize(wh.psi_local));
    o["nondegeneracy"] = verdict_json(wh.verdict);
    emit(out, o);
  }
  return 0;
}

Json cones_json(const std::vector<Cone>& cones) {
  Json a = Json::array();
  for (const auto& c : cones) a.push_back(points_json(c.generators()));
  return a;
}

int cmd_fan_check(const Job& job, std::istream& in, std::ostream& out) {
  if (job.fuzz > 0) {
    const std::vector<FanFuzzCase> cases = fan_fuzz(job.fuzz, job.seed);
    Json failures = Json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      if (!cases[i].passed) failures.push_back(Json{{"case", i}, {"sigma", points_json(cases[i].sigma.generators())}});
    }
    const std::size_t passed = cases.size() - failures.size();
    if (job.format == "text") {
      out << "fan-check: " << passed << "/" << cases.size() << " passed (seed " << job.seed << ")\n";
    } else {
      Json o = envelope(job);
      o["cases"] = cases.size();
      o["seed"] = job.seed;
      o["passed"] = passed;
      o["failures"] = failures;
      emit(out, o);
    }
    return failures.empty() ? 0 : 1;
  }
  const Input input = read_input(job, in);
  const NewtonPolyhedron np = newton_polyhedron(input.germ.f.support(), input.germ.sigma_dual);
  const Fan fan = polar_fan(np);
  const bool ok = refinement_euler_check(fan, dual_cone(input.germ.sigma_dual));
  if (job.format == "text") {
    out << "rays:";
    for (const auto& r : fan.rays()) out << " " << to_string(r);
    out << "\nmaximal cones: " << fan.maximal_cones().size() << "\n";
    out << "refinement_euler_check: " << (ok ? "pass" : "fail") << "\n";
  } else {
    Json o = envelope(job, input);
    o["rays"] = points_json(fan.rays());
    o["maximal_cones"] = cones_json(fan.maximal_cones());
    o["refinement_euler_check"] = ok;
    emit(out, o);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic Milnor fibres of Newton-nondegenerate toric germs", "newton-motive"};
  app.require_subcommand(1);
  Job job;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "full report with oracle cross-checks"},
      {"motivic", "the motivic Milnor fibre as a face sum"},
      {"euler", "Euler characteristic of the Milnor fibre"},
      {"milnor", "Milnor number"},
      {"zeta", "monodromy zeta function"},
      {"check-ndg", "per-face nondegeneracy verdicts"},
      {"oracle-mu", "Kouchnirenko number (orthant only)"},
      {"wh", "decomposition of a weighted homogeneous polynomial"},
      {"fan-check", "refinement identity for the polar fan or random star subdivisions"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--poly", job.poly, "polynomial, or - for stdin");
    sub->add_option("--poly-file", job.poly_file, "file holding the polynomial");
    sub->add_option("--vars", job.vars, "comma-separated variable names");
    sub->add_option("--cone", job.cone, "JSON list of rays of sigma-dual (default: orthant)");
    sub->add_option("--format", job.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--primes", job.primes, "comma-separated primes for the finite-field scan");
    sub->add_flag("--strict", job.strict, "treat unproven nondegeneracy as an error");
    sub->add_option("--jobs", job.jobs, "parallel face checks (0: all cores)");
    sub->add_option("--fuzz", job.fuzz, "fan-check: number of random cases");
    sub->add_option("--seed", job.seed, "fan-check: random seed");
    sub->callback([&job, name = name]() { job.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (job.command == "analyze") return cmd_analyze(job, in, out);
    if (job.command == "motivic") return cmd_motivic(job, in, out, err);
    if (job.command == "euler" || job.command == "milnor" || job.command == "oracle-mu") {
      return cmd_number(job, in, out, err);
    }
    if (job.command == "zeta") return cmd_zeta(job, in, out);
    if (job.command == "check-ndg") return cmd_check_ndg(job, in, out);
    if (job.command == "wh") return cmd_wh(job, in, out);
    if (job.command == "fan-check") return cmd_fan_check(job, in, out);
    err << "error: unknown command\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    if (e.error_class() == ErrorClass::Precondition && job.format == "json") {
      Json o = envelope(job);
      o["error"] = error_json(report_error(e));
      emit(out, o);
    }
    return exit_code(e.error_class());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nmotive
