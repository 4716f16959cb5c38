#pragma once

#include <string>
#include <vector>

#include "icefem/config.hpp"
#include "icefem/momentum.hpp"
#include "icefem/runlog.hpp"
#include "icefem/transport.hpp"

namespace icefem {

struct RunResult {
  RunLog log;
  std::vector<GnReport> gn_reports;  // one per completed step
  bool ok = false;
  int failed_step = -1;  // -1 when the run completed
  std::string error;
  TracerState tracers;     // state at the last completed step
  MomentumState momentum;
  std::vector<std::string> vtk_files;
  std::string csv_path;
};

// Time loop: advect tracers with u^n, then minimize the momentum functional
// by damped Gauss-Newton.  The step count is T rounded to whole steps of dt.
// Output goes under cfg.out_dir; the CSV log is written even if a step fails.
RunResult run(const BenchmarkConfig& cfg);

// Velocity sampler view of a Lagrange coefficient vector.
VelocitySampler coefficient_sampler(const Mesh& mesh, const DofMap& dm_u,
                                    const Eigen::VectorXd& u, double scale);

}  // namespace icefem
