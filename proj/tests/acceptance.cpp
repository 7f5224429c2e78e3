// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// With an argument N only criterion N runs.
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "nmotive/cli.hpp"
#include "nmotive/errors.hpp"
#include "nmotive/fuzz.hpp"
#include "nmotive/pipeline.hpp"
#include "nmotive/serialize.hpp"

using namespace nmotive;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

GermInput germ(const std::string& text) { return GermInput::orthant(parse(text).poly); }

std::vector<std::string> corpus() {
  std::vector<std::string> c;
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b) c.push_back("x^" + std::to_string(a) + "+y^" + std::to_string(b));
  for (int a = 2; a <= 3; ++a)
    for (int b = 2; b <= 3; ++b)
      for (int d = 2; d <= 3; ++d)
        c.push_back("x^" + std::to_string(a) + "+y^" + std::to_string(b) + "+z^" + std::to_string(d));
  c.push_back("x*y+x^3+y^3");
  c.push_back("x^2+y^2+z^2");
  return c;
}

Outcome cusp_golden() {
  Outcome o;
  auto g = germ("x^2+y^3");
  auto mf = motivic_milnor_fibre(g);
  // Standard resolution of the cusp: exceptional curves of multiplicity
  // 2, 3, 6 with open parts of Euler characteristic 1, 1, -1.
  ZetaFunction acampo;
  for (auto [m, chi] : {std::pair{2, 1}, {3, 1}, {6, -1}}) acampo *= ZetaFunction{{{m, -chi}}};
  // Kouchnirenko by hand: 2! * area - lengths + 1 = 6 - 5 + 1.
  o.expect(milnor_number(g) == 2, "mu != 2");
  o.expect(kouchnirenko_mu(g) == 2, "Kouchnirenko oracle != 2");
  o.expect(euler_specialize(mf.psi) == -1, "chi != -1");
  o.expect(monodromy_zeta(g) == acampo, "zeta differs from the A'Campo product");
  o.expect(canonicalize(mf.psi).terms.size() == 4, "psi does not have 4 canonical terms");
  return o;
}

Outcome kouchnirenko_agreement() {
  Outcome o;
  for (const auto& text : corpus()) o.expect(milnor_number(germ(text)) == kouchnirenko_mu(germ(text)), text);
  for (long a = 2; a <= 6; ++a)
    for (long b = 2; b <= 6; ++b) {
      const std::string t = "x^" + std::to_string(a) + "+y^" + std::to_string(b);
      o.expect(milnor_number(germ(t)) == (a - 1) * (b - 1), t + " closed form");
    }
  o.expect(milnor_number(germ("x^3+y^3+z^3")) == 8, "x^3+y^3+z^3");
  return o;
}

Outcome zeta_dual_path() {
  Outcome o;
  for (const auto& text : corpus()) {
    auto mf = motivic_milnor_fibre(germ(text));
    const ZetaFunction z = zeta_specialize(mf.psi);
    o.expect(z == direct_zeta(mf.faces), text);
    o.expect(z.degree() == -euler_specialize(mf.psi), text + " degree");
  }
  return o;
}

Outcome wh_cross_check() {
  Outcome o;
  int checked = 0;
  std::vector<std::string> members = corpus();
  members.push_back("x^3+y^3+z^3");
  for (const auto& text : members) {
    auto f = parse(text).poly;
    if (weighted_homogeneity(f).status != WeightedHomogeneity::Status::Homogeneous) continue;
    auto psi = motivic_milnor_fibre(GermInput::orthant(f)).psi;
    auto wh = wh_decomposition(f);
    o.expect(euler_specialize(wh.psi_local) == euler_specialize(psi), text + " euler");
    o.expect(zeta_specialize(wh.psi_local) == zeta_specialize(psi), text + " zeta");
    ++checked;
  }
  o.expect(checked >= 30, "too few homogeneous members");
  return o;
}

Outcome pyramid_identity() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(2, 5);
  int supports = 0, faces = 0;
  for (int i = 0; supports < 500; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i) % 3;
    const Cone sd = i % 2 == 0 ? Cone::orthant(n) : random_cone(rng, n);
    std::vector<LatticePoint> supp;
    const int k = size(rng);
    for (int j = 0; j < k; ++j) supp.push_back(random_cone_point(rng, sd, 2));
    for (const auto& face : compact_faces(newton_polyhedron(supp, sd))) {
      o.expect(face.nvol_hat == face.m * face.nvol_face, "face of support #" + std::to_string(supports));
      ++faces;
    }
    ++supports;
  }
  o.detail = o.pass ? std::to_string(supports) + " supports, " + std::to_string(faces) + " faces" : o.detail;
  return o;
}

Outcome fan_refinement() {
  Outcome o;
  const auto cases = fan_fuzz(100, 7);
  for (std::size_t i = 0; i < cases.size(); ++i) o.expect(cases[i].passed, "case " + std::to_string(i));
  if (o.pass) o.detail = std::to_string(cases.size()) + " random subdivisions";
  return o;
}

Outcome witnesses() {
  Outcome o;
  auto f = parse("x^2+2*x*y+y^2").poly;
  auto faces = compact_faces(newton_polyhedron(f.support(), Cone::orthant(2)));
  auto v = nondegeneracy_check(f, faces, default_primes());
  const FaceVerdict* bad = v.first_degenerate();
  o.expect(bad && bad->status == FaceStatus::ProvenDegenerate, "no ProvenDegenerate face");
  if (bad) o.expect(verify_witness(f, bad->witness), "witness does not verify");

  auto g = parse("x^2+y^3").poly;
  auto gv = nondegeneracy_check(g, compact_faces(newton_polyhedron(g.support(), Cone::orthant(2))), default_primes());
  o.expect(gv.all_exact(), "cusp is not exact on every face");
  return o;
}

std::string in_process(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  run(args, in, out, err);
  return out.str();
}

std::string subprocess(const std::string& command) {
  std::string out;
  FILE* p = popen(command.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

Outcome determinism() {
  Outcome o;
  for (const char* text : {"x^2+y^3", "x^3+y^3+z^3+x*y*z", "x^2+x^3*y^6"}) {
    std::vector<std::string> args{"analyze", "--poly", text, "--jobs", "4"};
    if (std::string(text) == "x^2+x^3*y^6") args.insert(args.end(), {"--cone", "[[1,0],[1,2]]"});
    const std::string a = in_process(args), b = in_process(args);
    o.expect(!a.empty() && a == b, std::string("in-process ") + text);
  }
  const std::string cmd = std::string(NMOTIVE_CLI_PATH) + " analyze --poly 'x^3+y^3+z^3+x*y*z' --jobs 4";
  const std::string a = subprocess(cmd), b = subprocess(cmd);
  o.expect(!a.empty() && a == b, "subprocess runs differ");
  o.expect(a == in_process({"analyze", "--poly", "x^3+y^3+z^3+x*y*z"}), "subprocess differs from in-process");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"cusp golden values", cusp_golden},
      {"Kouchnirenko agreement on the corpus", kouchnirenko_agreement},
      {"zeta dual-path agreement and deg = -chi", zeta_dual_path},
      {"weighted homogeneous cross-check", wh_cross_check},
      {"pyramid identity nvol_hat = m nvol_face", pyramid_identity},
      {"fan refinement identity", fan_refinement},
      {"nondegeneracy witnesses", witnesses},
      {"deterministic analyze output", determinism},
  };
  const std::size_t only = argc > 1 ? std::stoul(argv[1]) : 0;
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
