#include "icefem/driver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "icefem/fields.hpp"
#include "icefem/scenario.hpp"
#include "icefem/vtk.hpp"

namespace icefem {

namespace {

std::string snapshot_name(double hours) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "state_%08.1fh.vtk", hours);
  return buf;
}

void check_finite(const Eigen::VectorXd& v, const char* what, int step) {
  if (!v.allFinite())
    throw std::runtime_error(std::string("non-finite ") + what + " at step " +
                             std::to_string(step));
}

struct Spaces {
  DofMap sigma, u, tracer;
};

Spaces make_spaces(const Mesh& mesh, const std::string& elements) {
  Spaces sp;
  const int rt = elements == "rt1p2" ? 1 : 0;
  const int lg = elements == "rt1p2" ? 2 : 1;
  sp.sigma = build_dofmap(mesh, {Family::RavThomas, rt, 2});
  sp.u = build_dofmap(mesh, {Family::Lagrange, lg, 2});
  sp.tracer = build_dofmap(mesh, {Family::Lagrange, 1, 1});
  return sp;
}

}  // namespace

VelocitySampler coefficient_sampler(const Mesh& mesh, const DofMap& dm_u,
                                    const Eigen::VectorXd& u, double scale) {
  return [&mesh, &dm_u, coeffs = Eigen::VectorXd(u), scale](
             int tri, const Eigen::Vector2d& ref, const Eigen::Vector2d&,
             Eigen::Vector2d& vel, double& div_u) {
    const GeometryMap geom = geometry_map(mesh, tri, scale);
    vel = eval_lagrange_value(dm_u, coeffs, tri, ref);
    const Eigen::MatrixXd g = eval_lagrange_gradient(dm_u, coeffs, tri, ref, geom);
    div_u = g(0, 0) + g(1, 1);
  };
}

RunResult run(const BenchmarkConfig& cfg) {
  validate(cfg);
  RunResult res;

  const Mesh mesh = build_structured(cfg.n);
  const Spaces sp = make_spaces(mesh, cfg.elements);

  ScenarioState init =
      initial_state(mesh, sp.sigma, sp.u, sp.tracer, cfg.params, cfg.scale);
  TracerState tracers{std::move(init.A), std::move(init.H)};
  MomentumState state{std::move(init.sigma), std::move(init.u)};

  MomentumProblem pb;
  pb.mesh = &mesh;
  pb.dm_sigma = &sp.sigma;
  pb.dm_u = &sp.u;
  pb.dm_tracer = &sp.tracer;
  pb.dt = cfg.dt_seconds;
  pb.params = cfg.params;
  pb.opts.theta = cfg.theta;
  pb.opts.quad_order = cfg.quad_order;
  pb.opts.scale = cfg.scale;
  pb.opts.trace_factor = static_cast<int>(cfg.trace_factor);
  pb.opts.tol = cfg.gn_tol;
  pb.opts.max_iter = cfg.gn_max_iter;
  pb.opts.solver.method = cfg.solver_method == "direct" ? SolveOpts::Method::Direct
                          : cfg.solver_method == "cg"   ? SolveOpts::Method::CG
                                                        : SolveOpts::Method::Auto;
  pb.opts.solver.cg_tol = cfg.cg_tol;

  TransportOpts topts;
  topts.quad_order = cfg.quad_order;
  topts.scale = cfg.scale;
  topts.solver = pb.opts.solver;

  const std::filesystem::path out_dir(cfg.out_dir);
  if (cfg.write_vtk || cfg.write_csv) std::filesystem::create_directories(out_dir);

  auto snapshot = [&](double t_seconds) {
    if (!cfg.write_vtk) return;
    std::vector<VtkField> fields;
    fields.push_back({"u", sample_at_vertices(mesh, sp.u, state.u, cfg.scale)});
    const Eigen::MatrixXd sig =
        sample_at_vertices(mesh, sp.sigma, state.sigma, cfg.scale);
    fields.push_back({"sigma_1", sig.leftCols(2)});
    fields.push_back({"sigma_2", sig.rightCols(2)});
    fields.push_back({"A", sample_at_vertices(mesh, sp.tracer, tracers.A, cfg.scale)});
    fields.push_back({"H", sample_at_vertices(mesh, sp.tracer, tracers.H, cfg.scale)});
    const std::string path = (out_dir / snapshot_name(t_seconds / 3600.0)).string();
    export_vtk(mesh, fields, path, cfg.scale);
    res.vtk_files.push_back(path);
  };

  const int n_steps =
      static_cast<int>(std::llround(cfg.T_days * 86400.0 / cfg.dt_seconds));
  const int cadence = cadence_steps(cfg);

  snapshot(0.0);

  auto integral_of = [&](const Eigen::VectorXd& q) {
    return integrate(mesh, cfg.scale, 2,
                     [&](int tri, const Eigen::Vector2d& ref, const Eigen::Vector2d&) {
                       return eval_lagrange_value(sp.tracer, q, tri, ref)(0);
                     });
  };

  res.ok = true;
  for (int k = 0; k < n_steps; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    StepRecord rec;
    rec.step = k + 1;
    rec.time_days = (k + 1) * cfg.dt_seconds / 86400.0;
    try {
      const VelocitySampler vel =
          coefficient_sampler(mesh, sp.u, state.u, cfg.scale);
      auto [tr_new, as_info] = advect_step(mesh, sp.tracer, tracers, cfg.dt_seconds,
                                           vel, topts);
      check_finite(tr_new.A, "concentration", k + 1);
      check_finite(tr_new.H, "thickness", k + 1);
      tracers = std::move(tr_new);
      rec.phases = "advect";
      rec.qp_iters_A = as_info.A.iterations;
      rec.qp_iters_H = as_info.H.iterations;

      pb.A1 = &tracers.A;
      pb.H1 = &tracers.H;
      pb.state_n = state;
      const double t_theta_days =
          (k * cfg.dt_seconds + cfg.theta * cfg.dt_seconds) / 86400.0;
      pb.ext.wind = [&, t_theta_days](const Eigen::Vector2d& x) {
        return wind(x / cfg.scale, t_theta_days, cfg.params.v_a_max);
      };
      pb.ext.ocean = [&](const Eigen::Vector2d& x) {
        return ocean(x / cfg.scale, cfg.params.v_o_max);
      };

      auto [s_new, report] = gn_solve(pb, state);
      check_finite(s_new.u, "velocity", k + 1);
      check_finite(s_new.sigma, "stress", k + 1);
      state = std::move(s_new);
      rec.phases += ";momentum";
      rec.gn_iters = static_cast<int>(report.iters.size());
      rec.gn_converged = report.converged;

      const auto [fm, fc] = functional_parts(pb, state);
      rec.F_m = fm;
      rec.F_c = fc;
      rec.F_e = 0.0;
      rec.sym_defect = sigma_symmetry_defect(pb, state);
      rec.int_A = integral_of(tracers.A);
      rec.int_H = integral_of(tracers.H);
      rec.min_A = tracers.A.minCoeff();
      rec.max_A = tracers.A.maxCoeff();
      rec.min_H = tracers.H.minCoeff();
      rec.max_H = tracers.H.maxCoeff();
      rec.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();

      res.gn_reports.push_back(std::move(report));
      res.log.records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      res.ok = false;
      res.failed_step = k + 1;
      res.error = e.what();
      break;
    }

    if ((k + 1) % cadence == 0 || k + 1 == n_steps)
      snapshot((k + 1) * cfg.dt_seconds);
  }

  if (cfg.write_csv) {
    res.csv_path = (out_dir / "runlog.csv").string();
    write_runlog_csv(res.log, res.csv_path);
  }
  res.tracers = std::move(tracers);
  res.momentum = std::move(state);
  return res;
}

}  // namespace icefem
