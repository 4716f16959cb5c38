#pragma once

#include <cstdint>
#include <functional>

#include "icefem/assemble.hpp"
#include "icefem/sparse_system.hpp"

namespace icefem {

struct TracerState {
  Eigen::VectorXd A;  // concentration, P1 coefficients in [0,1]
  Eigen::VectorXd H;  // mean height, P1 coefficients >= 0
};

struct BoundedQpResult {
  Eigen::VectorXd x;
  Eigen::VectorXd mult_lo, mult_hi;   // KKT multiplier estimates, >= 0
  std::vector<std::int8_t> status;    // -1 at lower, 0 free, +1 at upper
  int iterations = 0;
  bool converged = false;
  double max_kkt_violation = 0.0;
};

struct ActiveSetInfo {
  BoundedQpResult A, H;
};

// u and div u of the advecting velocity at a reference point of a triangle.
using VelocitySampler = std::function<void(int tri, const Eigen::Vector2d& ref,
                                           const Eigen::Vector2d& x,
                                           Eigen::Vector2d& u, double& div_u)>;

struct TransportOpts {
  int quad_order = 4;
  double scale = 1.0;
  SolveOpts solver;
  int qp_max_iter = 0;  // 0: number of dofs
  double kkt_tol = 1e-12;
};

// LS normal equations of || (q - q_old)/dt + u.grad(q) + q div u ||^2 for one
// scalar P1 tracer.
SparseSystem advection_system(const Mesh& mesh, const DofMap& dm_scalar,
                              const Eigen::VectorXd& q_old, double dt,
                              const VelocitySampler& vel, const TransportOpts& opts);

// min 1/2 x'Ax - b'x subject to lo <= x <= hi, primal active-set method.
BoundedQpResult solve_bounded_qp(const Eigen::SparseMatrix<double>& A,
                                 const Eigen::VectorXd& b, const Eigen::VectorXd& lo,
                                 const Eigen::VectorXd& hi, const TransportOpts& opts);

// Advects both tracers with the frozen velocity u^n and enforces H >= 0,
// A in [0,1] by the active-set QP.
std::pair<TracerState, ActiveSetInfo> advect_step(const Mesh& mesh,
                                                  const DofMap& dm_scalar,
                                                  const TracerState& tracers,
                                                  double dt, const VelocitySampler& vel,
                                                  const TransportOpts& opts);

// Value of the advection residual functional at given new coefficients,
// evaluated by direct quadrature (both tracers summed).
double transport_functional(const Mesh& mesh, const DofMap& dm_scalar,
                            const TracerState& tracers_new, const TracerState& tracers_old,
                            double dt, const VelocitySampler& vel,
                            const TransportOpts& opts);

}  // namespace icefem
