// Command-line front end. Exit codes: 0 pass, 1 suite violation, 2 infeasible
// hypotheses, 64 usage, 70 internal failure.
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "speclab/cheeger.hpp"
#include "speclab/constants.hpp"
#include "speclab/constructions.hpp"
#include "speclab/eigensolver.hpp"
#include "speclab/errors.hpp"
#include "speclab/generators.hpp"
#include "speclab/maps.hpp"
#include "speclab/matrix_stability.hpp"
#include "speclab/moser.hpp"
#include "speclab/sphere_check.hpp"

using namespace speclab;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;
constexpr std::uint64_t kDefaultSeed = 20240601;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double env_tolerance(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const double x = std::strtod(v, &end);
  if (*end != '\0' || !(x > 0) || !std::isfinite(x))
    throw UsageError(std::string(name) + " must be a positive number");
  return x;
}

EigOptions eig_options(std::uint64_t seed) {
  EigOptions o;
  o.tol = env_tolerance("SPECLAB_EIG_TOL", o.tol);
  o.seed = seed;
  return o;
}

double quad_tolerance() { return env_tolerance("SPECLAB_QUAD_TOL", 1e-12); }

// Writes to the file, or stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string csv_row(const std::vector<double>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s + "\n";
}

std::string out_file(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

// ---- bounds ----

struct BoundsArgs {
  BoundInputs in;
  double lambda = 0.0;
  std::string out;
};

int run_bounds(const BoundsArgs& a) {
  const auto report = bounds_report(a.in, a.lambda, quad_tolerance());
  emit(a.out, report.dump(2) + "\n");
  return report["factor"]["feasible"].get<bool>() ? 0 : kExitInfeasible;
}

// ---- xi ----

struct XiArgs {
  double p = 3.0;
  std::vector<double> xs;
  double from = 0.0, to = 10.0;
  int count = 11;
  double rel_tol = 1e-12;
  std::string out;
};

int run_xi(const XiArgs& a) {
  std::vector<double> xs = a.xs;
  if (xs.empty()) {
    if (a.count < 1) throw UsageError("--count must be >= 1");
    for (int i = 0; i < a.count; ++i) xs.push_back(a.count == 1 ? a.from : a.from + (a.to - a.from) * i / (a.count - 1));
  }
  std::string text = "x,value,tail_bound,truncation_m,upper_closed,upper_poly,upper_power\n";
  for (double x : xs) {
    const auto e = xi(a.p, x, a.rel_tol);
    text += fmt(x) + "," + fmt(e.value) + "," + fmt(e.tail_bound) + "," + std::to_string(e.truncation_m) + "," +
            fmt(e.upper_closed) + "," + fmt(xi_upper_poly(a.p, x)) + "," +
            (x >= 1 ? fmt(xi_upper_power(a.p, x)) : std::string("")) + "\n";
  }
  emit(a.out, text);
  return 0;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite;
  int n_min = 2, n_max = 6;
  long samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string out;
};

int verify_appendix_a(const VerifyArgs& a) {
  json j = json::array();
  long violations = 0;
  for (const char* suite : {"prop-a1", "lemma-a2", "lemma-a3", "quasi-isometry"})
    for (int n = a.n_min; n <= a.n_max; ++n) {
      const auto r = run_stability_suite(suite, n, a.samples, a.seed + std::uint64_t(n));
      violations += r.violations;
      j.push_back(suite_to_json(r));
    }
  emit(a.out, json{{"suite", "appendix-a"}, {"violations", violations}, {"runs", j}}.dump(2) + "\n");
  return violations == 0 ? 0 : kExitViolation;
}

int verify_appendix_b(const VerifyArgs& a) {
  long violations = 0, checked = 0;
  json worst = json::object();
  double worst_margin = INFINITY;
  for (double p : {3.0, 4.0, 6.0}) {
    if (xi(p, 0).value != 1.0) ++violations;
    for (int i = 0; i < 200; ++i) {
      const double x = 1e3 * i / 199.0;
      const double v = xi(p, x).value;
      std::vector<double> majorants{xi_upper_closed(p, x)};
      if (x >= 1) majorants.push_back(xi_upper_power(p, x));
      for (double m : majorants) {
        ++checked;
        const double margin = m / v - 1.0;
        if (margin < worst_margin) {
          worst_margin = margin;
          worst = {{"p", p}, {"x", x}, {"xi", v}, {"majorant", m}};
        }
        if (v > m) ++violations;
      }
    }
  }
  const json j{{"suite", "appendix-b"}, {"checked", checked}, {"violations", violations},
               {"tightest_relative_margin", worst_margin}, {"tightest", worst}};
  emit(a.out, j.dump(2) + "\n");
  return violations == 0 ? 0 : kExitViolation;
}

int verify_appendix_c(const VerifyArgs& a) {
  long violations = 0;
  json rows = json::array();
  std::string csv = "n,u_sup,lap_u_sup,sup_ratio,lambda,first_k,ratio_at_first_k\n";
  for (int n = a.n_min; n <= a.n_max; ++n) {
    const auto r = counterexample_report(n, 64);
    const bool ok = std::abs(r.u_sup - 0.5) <= 1e-12 && std::abs(r.lap_u_sup - 2.0 * n) <= 1e-12 &&
                    std::abs(r.sup_ratio - 4.0 * n) <= 1e-12 && r.sup_ratio > r.lambda && r.first_k.has_value();
    if (!ok) ++violations;
    const double at_k = r.first_k ? r.ratios[*r.first_k - 1] : NAN;
    csv += std::to_string(n) + "," + fmt(r.u_sup) + "," + fmt(r.lap_u_sup) + "," + fmt(r.sup_ratio) + "," +
           fmt(r.lambda) + "," + (r.first_k ? std::to_string(*r.first_k) : std::string("")) + "," +
           (r.first_k ? fmt(at_k) : std::string("")) + "\n";
    rows.push_back({{"n", n}, {"u_sup", r.u_sup}, {"lap_u_sup", r.lap_u_sup}, {"sup_ratio", r.sup_ratio},
                    {"lambda", r.lambda}, {"first_k", r.first_k ? json(*r.first_k) : json(nullptr)}, {"pass", ok}});
  }
  if (a.format == "csv")
    emit(a.out, csv);
  else
    emit(a.out, json{{"suite", "appendix-c"}, {"violations", violations}, {"rows", rows}}.dump(2) + "\n");
  return violations == 0 ? 0 : kExitViolation;
}

int verify_cheeger(const VerifyArgs& a) {
  RevolutionProfile dumbbell;
  dumbbell.s = {0, 1, 2, 2.02, 3.02, 4.02};
  dumbbell.rho = {0, 1, 0.02, 0.02, 1, 0};
  dumbbell.segments = 3;
  const std::vector<std::pair<std::string, TriMesh>> meshes{
      {"tetrahedron", tetrahedron()},
      {"octahedron", octahedron()},
      {"icosahedron", icosphere(0)},
      {"flat-torus-3x4", flat_torus(3, 4, 1.0, 1.3)},
      {"conformal-torus-4x4", conformal_torus(4, 4, 1, 1, 0.3)},
      {"dumbbell", build_revolution_mesh(dumbbell).mesh}};
  long violations = 0;
  json rows = json::array();
  for (const auto& [name, m] : meshes) {
    const auto c = brute_cheeger(m);
    const double lambda1 = dense_eigs_oracle(cotan_laplacian(m)).values(1);
    const double bound = c.h * c.h / c.discrete_constant;
    const bool ok = lambda1 >= bound * (1 - 1e-12);
    if (!ok) ++violations;
    rows.push_back({{"mesh", name}, {"h", c.h}, {"discrete_constant", c.discrete_constant}, {"lambda1", lambda1},
                    {"lower_bound", bound}, {"riemannian_form", c.h * c.h / 4}, {"pass", ok}});
  }
  emit(a.out, json{{"suite", "cheeger"}, {"violations", violations}, {"rows", rows}}.dump(2) + "\n");
  return violations == 0 ? 0 : kExitViolation;
}

int run_verify(const VerifyArgs& a) {
  if (a.n_min < 2 || a.n_max < a.n_min) throw UsageError("need 2 <= --n-min <= --n-max");
  if (a.samples < 1) throw UsageError("--samples must be >= 1");
  if (a.suite == "appendix-a") return verify_appendix_a(a);
  if (a.suite == "appendix-b") return verify_appendix_b(a);
  if (a.suite == "appendix-c") return verify_appendix_c(a);
  return verify_cheeger(a);
}

// ---- experiments ----

struct ExperimentArgs {
  std::string name;
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir = ".";
  std::vector<double> deltas{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  std::vector<double> amplitudes{0.02, 0.05, 0.1};
  int i_max = 5;
};

int experiment_mushroom(const ExperimentArgs& a) {
  MushroomParams p;
  const auto s = mushroom_lambda1_sweep(p, a.deltas, eig_options(a.seed));
  std::string csv = "delta,lambda1,measured_ratio,predicted_ratio,ratio_of_ratios,fit\n";
  json pts = json::array();
  for (const auto& pt : s.points) {
    const double fit = s.fitted_constant / -std::log(std::asin(pt.delta));
    const double rr = pt.predicted_ratio > 0 ? pt.measured_ratio / pt.predicted_ratio : NAN;
    csv += fmt(pt.delta) + "," + fmt(pt.lambda1) + "," + (pt.predicted_ratio > 0 ? fmt(pt.measured_ratio) : "") +
           "," + (pt.predicted_ratio > 0 ? fmt(pt.predicted_ratio) : "") + "," +
           (pt.predicted_ratio > 0 ? fmt(rr) : "") + "," + fmt(fit) + "\n";
    pts.push_back({{"delta", pt.delta}, {"lambda1", pt.lambda1}, {"measured_ratio", pt.measured_ratio},
                   {"predicted_ratio", pt.predicted_ratio}});
  }
  const json j{{"experiment", "mushroom"}, {"epsilon", p.epsilon}, {"cap_radius", mushroom_default_cap_radius(p.epsilon, p.base_radius)},
               {"base_lambda1", s.base_lambda1}, {"fitted_constant", s.fitted_constant}, {"points", pts}};
  emit(out_file(a.out_dir, "mushroom.csv"), csv);
  emit(out_file(a.out_dir, "mushroom.json"), j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return 0;
}

json minimax_json(const std::string& name, const MinimaxReport& r) {
  return {{"case", name},         {"delta", r.delta},       {"epsilon", r.epsilon},   {"feasible", r.feasible},
          {"lambda_x", r.lambda_x}, {"lambda_y", r.lambda_y}, {"ritz_y", r.ritz_y},   {"bound", r.bound},
          {"violations", r.violations}};
}

int experiment_pullback(const ExperimentArgs& a) {
  const auto opt = eig_options(a.seed);
  const double L = 2 * std::numbers::pi;
  json cases = json::array();
  std::string csv = "case,i,lambda_x,lambda_y,bound,delta,epsilon\n";
  long violations = 0;
  auto record = [&](const std::string& name, const MinimaxReport& r) {
    violations += r.violations;
    cases.push_back(minimax_json(name, r));
    for (int i = 0; i <= r.i_max; ++i)
      csv += name + "," + std::to_string(i) + "," + fmt(r.lambda_x[i]) + "," + fmt(r.lambda_y[i]) + "," +
             fmt(r.bound[i]) + "," + fmt(r.delta) + "," + fmt(r.epsilon) + "\n";
  };
  const auto x = flat_torus(32, 32, L, L);
  record("identity", minimax_check(x, x, identity_map(x), a.i_max, opt));
  for (double amp : a.amplitudes) {
    const auto y = conformal_torus(32, 32, L, L, amp);
    record("conformal-" + fmt(amp), minimax_check(y, x, identity_map(x), a.i_max, opt));
  }
  const auto m = mushroom(MushroomParams{});
  record("mushroom", minimax_check(m.surface, m.base, m.map, a.i_max, opt));
  emit(out_file(a.out_dir, "pullback.csv"), csv);
  const json j{{"experiment", "pullback"}, {"violations", violations}, {"cases", cases}};
  emit(out_file(a.out_dir, "pullback.json"), j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return violations == 0 ? 0 : kExitViolation;
}

int experiment_torus(const ExperimentArgs& a) {
  const auto opt = eig_options(a.seed);
  const double L = 2 * std::numbers::pi;
  std::string csv = "surface,resolution,vertices,lambda1,lambda2,lambda3,lambda4,max_rel_error\n";
  json rows = json::array();
  for (int m : {8, 16, 32, 64}) {
    const auto r = smallest_eigs(cotan_laplacian(flat_torus(m, m, L, L)), 5, opt);
    double err = 0;
    for (int i = 1; i <= 4; ++i) err = std::max(err, std::abs(r.values(i) - 1.0));
    csv += "torus," + std::to_string(m) + "," + std::to_string(m * m) + "," +
           csv_row({r.values(1), r.values(2), r.values(3), r.values(4), err});
    rows.push_back({{"surface", "torus"}, {"resolution", m}, {"lambda", {r.values(1), r.values(2), r.values(3), r.values(4)}},
                    {"max_rel_error", err}});
  }
  for (int s = 2; s <= 5; ++s) {
    const auto mesh = icosphere(s);
    const auto r = smallest_eigs(cotan_laplacian(mesh), 5, opt);
    double err = 0;
    for (int i = 1; i <= 3; ++i) err = std::max(err, std::abs(r.values(i) - 2.0) / 2.0);
    csv += "sphere," + std::to_string(s) + "," + std::to_string(mesh.vertex_count()) + "," +
           csv_row({r.values(1), r.values(2), r.values(3), r.values(4), err});
    rows.push_back({{"surface", "sphere"}, {"resolution", s}, {"lambda", {r.values(1), r.values(2), r.values(3), r.values(4)}},
                    {"max_rel_error", err}});
  }
  emit(out_file(a.out_dir, "torus-convergence.csv"), csv);
  const json j{{"experiment", "torus-convergence"}, {"rows", rows}};
  emit(out_file(a.out_dir, "torus-convergence.json"), j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return 0;
}

int experiment_gluing(const ExperimentArgs& a) {
  const auto opt = eig_options(a.seed);
  GluingParams gp;
  const auto c = tube_gluing(gp);
  const double eps_hat = gh_distortion(c.map, c.surface, c.base, sample_pairs(c.surface.vertex_count(), a.seed));
  const auto sy = smallest_eigs(cotan_laplacian(c.surface), a.i_max + 1, opt);
  const auto sx = smallest_eigs(cotan_laplacian(c.base), a.i_max + 1, opt);
  BoundInputs in;
  in.n = 2;
  in.p = 3;
  in.kappa = 1;
  in.D = std::numbers::pi;
  in.i0 = std::numbers::pi;
  in.epsilon = eps_hat;
  in.epsilon0 = 1;
  in.vol_y = total_area(c.surface);
  in.vol_x = total_area(c.base);
  std::string csv = "i,lambda_x,lambda_y,multiplier,margin\n";
  json rows = json::array();
  bool feasible = true;
  for (int i = 0; i <= a.i_max; ++i) {
    const double lx = std::max(sx.values(i), 0.0);  // lambda_0 can round below zero
    const auto f = theorem_bound(in, lx, quad_tolerance());
    feasible = f.feasible;
    const double margin = f.multiplier * lx - sy.values(i);
    csv += std::to_string(i) + "," + csv_row({sx.values(i), sy.values(i), f.multiplier, margin});
    rows.push_back({{"i", i}, {"lambda_x", sx.values(i)}, {"lambda_y", sy.values(i)}, {"multiplier", f.multiplier},
                    {"margin", margin}});
  }
  const json j{{"experiment", "gluing"},
               {"epsilon_hat", eps_hat},
               {"vol_y", in.vol_y},
               {"vol_x", in.vol_x},
               {"volume_ratio", in.vol_y / in.vol_x},
               {"scale", c.scale},
               {"tube_length", c.tube_length},
               {"hypotheses_feasible", feasible},
               {"epsilon_one", epsilon_one(in).value},
               {"rows", rows}};
  emit(out_file(a.out_dir, "gluing.csv"), csv);
  emit(out_file(a.out_dir, "gluing.json"), j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_experiment(const ExperimentArgs& a) {
  if (a.name == "mushroom") return experiment_mushroom(a);
  if (a.name == "pullback") return experiment_pullback(a);
  if (a.name == "torus-convergence") return experiment_torus(a);
  return experiment_gluing(a);
}

// ---- spectrum / mesh ----

struct MeshArgs {
  std::string off, lengths;
  int icosphere = -1;
  std::vector<int> torus;
  double length = 2 * std::numbers::pi;
  double amplitude = 0.0;
};

TriMesh load_mesh(const MeshArgs& a) {
  const int given = int(!a.off.empty()) + int(a.icosphere >= 0) + int(!a.torus.empty());
  if (given != 1) throw UsageError("give exactly one of --off, --icosphere, --torus");
  if (!a.off.empty()) return read_off(a.off, a.lengths);
  if (a.icosphere >= 0) return icosphere(a.icosphere);
  if (a.torus.size() != 2) throw UsageError("--torus takes two grid sizes");
  if (a.amplitude != 0.0) return conformal_torus(a.torus[0], a.torus[1], a.length, a.length, a.amplitude);
  return flat_torus(a.torus[0], a.torus[1], a.length, a.length);
}

int run_spectrum(const MeshArgs& m, int count, std::uint64_t seed, const std::string& out) {
  const auto mesh = load_mesh(m);
  validate(mesh);
  const auto r = smallest_eigs(cotan_laplacian(mesh), count, eig_options(seed));
  std::string csv = "index,eigenvalue,residual\n";
  for (int i = 0; i < r.values.size(); ++i)
    csv += std::to_string(i) + "," + fmt(r.values(i)) + "," + fmt(r.residuals(i)) + "\n";
  emit(out, csv);
  return 0;
}

int run_mesh(const MeshArgs& m, const std::string& out, const std::string& lengths_out) {
  if (out.empty()) throw UsageError("--out is required");
  const auto mesh = load_mesh(m);
  validate(mesh);
  write_off(mesh, out, lengths_out);
  std::cout << json{{"vertices", mesh.vertex_count()}, {"faces", mesh.face_count()}, {"area", total_area(mesh)},
                    {"diameter", graph_diameter(mesh)}}
                   .dump(2)
            << "\n";
  return 0;
}

void add_mesh_options(CLI::App* cmd, MeshArgs& m) {
  cmd->add_option("--off", m.off, "OFF file to read");
  cmd->add_option("--lengths", m.lengths, "CSV of per-face edge lengths accompanying --off");
  cmd->add_option("--icosphere", m.icosphere, "icosphere subdivision level")->check(CLI::Range(0, 7));
  cmd->add_option("--torus", m.torus, "flat torus grid: M K")->expected(2);
  cmd->add_option("--length", m.length, "torus side length");
  cmd->add_option("--amplitude", m.amplitude, "conformal perturbation of the torus metric");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral comparison laboratory.\n\n"
               "Environment overrides:\n"
               "  SPECLAB_EIG_TOL   relative residual tolerance of the eigensolver (default 1e-10)\n"
               "  SPECLAB_QUAD_TOL  relative tolerance for the Sobolev-constant integrals (default 1e-12)\n\n"
               "Exit codes: 0 pass, 1 suite violation, 2 infeasible hypotheses, 64 usage, 70 internal error."};
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "eigenvalue comparison constants as JSON");
  b->add_option("--n", bounds.in.n, "dimension")->required();
  b->add_option("--kappa", bounds.in.kappa, "curvature scale")->required();
  b->add_option("--D", bounds.in.D, "diameter bound")->required();
  b->add_option("--i0", bounds.in.i0, "injectivity radius bound")->required();
  b->add_option("--eps", bounds.in.epsilon, "approximation quality")->required();
  b->add_option("--eps0", bounds.in.epsilon0, "externally supplied threshold")->required();
  b->add_option("--lambda", bounds.lambda, "eigenvalue of X")->required();
  b->add_option("--p", bounds.in.p, "Sobolev exponent used when n = 2");
  b->add_option("--vol-x", bounds.in.vol_x, "volume of X");
  b->add_option("--vol-y", bounds.in.vol_y, "volume of Y");
  b->add_option("--out", bounds.out, "output path (default stdout)");

  XiArgs xa;
  auto* x = app.add_subcommand("xi", "Moser product table as CSV");
  x->add_option("--p", xa.p, "Sobolev exponent");
  x->add_option("--x", xa.xs, "explicit arguments");
  x->add_option("--from", xa.from);
  x->add_option("--to", xa.to);
  x->add_option("--count", xa.count);
  x->add_option("--rel-tol", xa.rel_tol);
  x->add_option("--out", xa.out);

  VerifyArgs va;
  auto* v = app.add_subcommand("verify", "property suites");
  v->add_option("suite", va.suite)->required()->check(CLI::IsMember({"appendix-a", "appendix-b", "appendix-c", "cheeger"}));
  v->add_option("--n-min", va.n_min);
  v->add_option("--n-max", va.n_max);
  v->add_option("--samples", va.samples, "accepted samples per suite and dimension");
  v->add_option("--seed", va.seed);
  v->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv"}));
  v->add_option("--out", va.out);

  ExperimentArgs ea;
  auto* e = app.add_subcommand("experiment", "mesh experiments writing CSV and JSON");
  e->add_option("name", ea.name)->required()->check(CLI::IsMember({"mushroom", "pullback", "torus-convergence", "gluing"}));
  e->add_option("--seed", ea.seed);
  e->add_option("--out-dir", ea.out_dir);
  e->add_option("--deltas", ea.deltas, "decreasing neck sizes for the mushroom sweep");
  e->add_option("--amplitudes", ea.amplitudes, "conformal amplitudes for the pullback experiment");
  e->add_option("--i-max", ea.i_max)->check(CLI::Range(1, 20));

  MeshArgs sm;
  int count = 10;
  std::uint64_t spec_seed = kDefaultSeed;
  std::string spec_out;
  auto* s = app.add_subcommand("spectrum", "smallest eigenvalues of a mesh as CSV");
  add_mesh_options(s, sm);
  s->add_option("--count", count)->check(CLI::PositiveNumber);
  s->add_option("--seed", spec_seed);
  s->add_option("--out", spec_out);

  MeshArgs mm;
  std::string mesh_out, lengths_out;
  auto* m = app.add_subcommand("mesh", "write a generated mesh as OFF");
  add_mesh_options(m, mm);
  m->add_option("--out", mesh_out);
  m->add_option("--lengths-out", lengths_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*b) return run_bounds(bounds);
    if (*x) return run_xi(xa);
    if (*v) return run_verify(va);
    if (*e) return run_experiment(ea);
    if (*s) return run_spectrum(sm, count, spec_seed, spec_out);
    if (*m) return run_mesh(mm, mesh_out, lengths_out);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
