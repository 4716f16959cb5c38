#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icefem/driver.hpp"
#include "icefem/verify.hpp"

namespace {

int cmd_run(const std::string& config_path, const std::vector<std::string>& sets) {
  icefem::BenchmarkConfig cfg;
  if (!config_path.empty()) cfg = icefem::load_config(config_path);
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects section.key=value, got '" + kv + "'");
    icefem::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  icefem::validate(cfg);

  const icefem::RunResult res = icefem::run(cfg);

  int unconverged = 0;
  for (const auto& r : res.log.records)
    if (!r.gn_converged) ++unconverged;

  std::printf("steps completed: %zu\n", res.log.records.size());
  if (!res.log.records.empty()) {
    const auto& last = res.log.records.back();
    std::printf("final t = %g days, F = %.6g, A in [%g, %g], H in [%g, %g]\n",
                last.time_days, last.F_m + last.F_c + last.F_e, last.min_A,
                last.max_A, last.min_H, last.max_H);
  }
  if (!res.csv_path.empty()) std::printf("log: %s\n", res.csv_path.c_str());
  for (const auto& f : res.vtk_files) std::printf("vtk: %s\n", f.c_str());
  if (!res.ok) {
    std::fprintf(stderr, "step %d failed: %s\n", res.failed_step, res.error.c_str());
    return 2;
  }
  if (unconverged > 0) {
    std::fprintf(stderr, "%d steps did not reach the GN tolerance\n", unconverged);
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& suite) {
  std::vector<icefem::VerifyReport> reports;
  if (suite == "derivatives" || suite == "all")
    reports.push_back(icefem::verify_derivatives());
  if (suite == "convergence" || suite == "all")
    reports.push_back(icefem::verify_convergence());
  if (suite == "elements" || suite == "all")
    reports.push_back(icefem::verify_elements());
  if (reports.empty()) {
    std::fprintf(stderr, "unknown suite '%s'\n", suite.c_str());
    return 2;
  }
  bool ok = true;
  for (const auto& rep : reports) {
    std::fputs(icefem::format_report(rep).c_str(), stdout);
    ok = ok && rep.all_pass();
  }
  return ok ? 0 : 1;
}

int cmd_mesh_info(int n) {
  const icefem::Mesh mesh = icefem::build_structured(n);
  const icefem::MeshQuality q = icefem::mesh_quality(mesh);
  std::printf("vertices:  %d\n", mesh.n_vertices());
  std::printf("triangles: %d\n", mesh.n_triangles());
  std::printf("edges:     %d (%d boundary)\n", mesh.n_edges(), mesh.n_boundary_edges());
  std::printf("min angle: %.4f deg\n", q.min_angle_deg);
  std::printf("max aspect: %.4f\n", q.max_aspect);
  std::printf("min area:  %.6g\n", q.min_area);
  for (const auto& s : q.issues) std::printf("issue: %s\n", s.c_str());
  return q.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"viscous-plastic sea ice, least-squares FEM"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  auto* run = app.add_subcommand("run", "time-step the benchmark scenario");
  run->add_option("config", config_path, "config file (defaults used if omitted)");
  run->add_option("--set", sets, "override a key, e.g. --set time.T_days=1")
      ->take_all();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "derivatives | convergence | elements | all");

  int n = 8;
  auto* mesh_info = app.add_subcommand("mesh-info", "structured mesh statistics");
  mesh_info->add_option("n", n, "cells per side")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, sets);
    if (verify->parsed()) return cmd_verify(suite);
    if (mesh_info->parsed()) return cmd_mesh_info(n);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
