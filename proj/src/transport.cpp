#include "icefem/transport.hpp"

#include <Eigen/SparseCholesky>
#include <limits>
#include <stdexcept>

#include "icefem/fields.hpp"

namespace icefem {

SparseSystem advection_system(const Mesh& mesh, const DofMap& dm_scalar,
                              const Eigen::VectorXd& q_old, double dt,
                              const VelocitySampler& vel, const TransportOpts& opts) {
  if (dt <= 0) throw std::invalid_argument("advection_system: dt must be positive");
  const std::vector<LsBlock> blocks = {{&dm_scalar, 0}};
  return assemble_ls(
      mesh, opts.scale, blocks, 1, opts.quad_order,
      [&](const QuadPointCtx& ctx, Eigen::MatrixXd& L, Eigen::VectorXd& r) {
        Eigen::Vector2d u;
        double div_u;
        vel(ctx.tri, ctx.ref, ctx.x, u, div_u);
        const BasisAtPoint& p1 = (*ctx.basis)[0];
        double q_here = 0;
        for (int i = 0; i < p1.values.size(); ++i) {
          L(0, i) = p1.values[i] / dt + u.dot(p1.grads.row(i)) + p1.values[i] * div_u;
          q_here += q_old[dm_scalar.tri_gids[ctx.tri][i]] * p1.values[i];
        }
        r[0] = -q_here / dt;
      });
}

namespace {

Eigen::VectorXd solve_reduced(const Eigen::SparseMatrix<double>& A,
                              const Eigen::VectorXd& rhs,
                              const std::vector<std::int8_t>& status,
                              const Eigen::VectorXd& x_fixed) {
  const int n = static_cast<int>(rhs.size());
  std::vector<int> free_of(n, -1);
  std::vector<int> free_list;
  for (int i = 0; i < n; ++i)
    if (status[i] == 0) {
      free_of[i] = static_cast<int>(free_list.size());
      free_list.push_back(i);
    }
  const int nf = static_cast<int>(free_list.size());
  if (nf == 0) return x_fixed;

  Eigen::VectorXd rf(nf);
  for (int k = 0; k < nf; ++k) rf[k] = rhs[free_list[k]];
  std::vector<Eigen::Triplet<double>> trips;
  for (int j = 0; j < A.outerSize(); ++j)
    for (Eigen::SparseMatrix<double>::InnerIterator it(A, j); it; ++it) {
      const int fi = free_of[it.row()], fj = free_of[it.col()];
      if (fi >= 0 && fj >= 0)
        trips.emplace_back(fi, fj, it.value());
      else if (fi >= 0)
        rf[fi] -= it.value() * x_fixed[it.col()];
    }
  Eigen::SparseMatrix<double> Af(nf, nf);
  Af.setFromTriplets(trips.begin(), trips.end());

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(Af);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("solve_bounded_qp: reduced system factorization failed");
  const Eigen::VectorXd xf = ldlt.solve(rf);

  Eigen::VectorXd x = x_fixed;
  for (int k = 0; k < nf; ++k) x[free_list[k]] = xf[k];
  return x;
}

}  // namespace

BoundedQpResult solve_bounded_qp(const Eigen::SparseMatrix<double>& A,
                                 const Eigen::VectorXd& b, const Eigen::VectorXd& lo,
                                 const Eigen::VectorXd& hi, const TransportOpts& opts) {
  const int n = static_cast<int>(b.size());
  BoundedQpResult res;
  res.status.assign(n, 0);
  res.mult_lo = Eigen::VectorXd::Zero(n);
  res.mult_hi = Eigen::VectorXd::Zero(n);

  SparseSystem sys{A, b};
  Eigen::VectorXd x = solve_spd(sys, nullptr, opts.solver);

  // Start from the clipped unconstrained minimizer.
  for (int i = 0; i < n; ++i) {
    if (x[i] <= lo[i]) {
      x[i] = lo[i];
      res.status[i] = -1;
    } else if (x[i] >= hi[i]) {
      x[i] = hi[i];
      res.status[i] = 1;
    }
  }

  const int max_iter = opts.qp_max_iter > 0 ? opts.qp_max_iter : std::max(n, 16);
  for (res.iterations = 1; res.iterations <= max_iter; ++res.iterations) {
    x = solve_reduced(A, b, res.status, x);

    // Activate every free dof the reduced solve pushed out of bounds.
    bool violated = false;
    for (int i = 0; i < n; ++i) {
      if (res.status[i] != 0) continue;
      if (x[i] < lo[i]) {
        x[i] = lo[i];
        res.status[i] = -1;
        violated = true;
      } else if (x[i] > hi[i]) {
        x[i] = hi[i];
        res.status[i] = 1;
        violated = true;
      }
    }
    if (violated) continue;

    // Primal feasible; check dual signs and release the worst offender.
    const Eigen::VectorXd g = A * x - b;
    int worst = -1;
    double worst_mult = -opts.kkt_tol;
    for (int i = 0; i < n; ++i) {
      if (res.status[i] == 0) continue;
      const double mult = res.status[i] < 0 ? g[i] : -g[i];
      if (mult < worst_mult) {
        worst_mult = mult;
        worst = i;
      }
    }
    if (worst < 0) {
      for (int i = 0; i < n; ++i) {
        if (res.status[i] < 0) res.mult_lo[i] = g[i];
        if (res.status[i] > 0) res.mult_hi[i] = -g[i];
      }
      res.converged = true;
      res.x = x;
      return res;
    }
    res.status[worst] = 0;
  }

  const Eigen::VectorXd g = A * x - b;
  for (int i = 0; i < n; ++i) {
    double v = 0;
    if (res.status[i] == 0)
      v = std::abs(g[i]);
    else
      v = std::max(0.0, res.status[i] < 0 ? -g[i] : g[i]);
    res.max_kkt_violation = std::max(res.max_kkt_violation, v);
  }
  res.converged = false;
  res.x = x;
  return res;
}

std::pair<TracerState, ActiveSetInfo> advect_step(const Mesh& mesh,
                                                  const DofMap& dm_scalar,
                                                  const TracerState& tracers,
                                                  double dt, const VelocitySampler& vel,
                                                  const TransportOpts& opts) {
  const int n = dm_scalar.n_global;
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  const Eigen::VectorXd one = Eigen::VectorXd::Ones(n);
  const double inf = std::numeric_limits<double>::infinity();

  const SparseSystem sys_h = advection_system(mesh, dm_scalar, tracers.H, dt, vel, opts);
  const SparseSystem sys_a = advection_system(mesh, dm_scalar, tracers.A, dt, vel, opts);

  ActiveSetInfo info;
  info.H = solve_bounded_qp(sys_h.A, sys_h.b, zero, inf * one, opts);
  info.A = solve_bounded_qp(sys_a.A, sys_a.b, zero, one, opts);
  if (!info.H.converged || !info.A.converged)
    throw std::runtime_error("advect_step: active set did not converge, max KKT violation " +
                             std::to_string(std::max(info.H.max_kkt_violation,
                                                     info.A.max_kkt_violation)));

  TracerState out;
  out.H = info.H.x;
  out.A = info.A.x;
  return {out, info};
}

double transport_functional(const Mesh& mesh, const DofMap& dm_scalar,
                            const TracerState& tracers_new, const TracerState& tracers_old,
                            double dt, const VelocitySampler& vel,
                            const TransportOpts& opts) {
  const QuadRule rule = quadrature(opts.quad_order);
  double total = 0;
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const GeometryMap geom = geometry_map(mesh, t, opts.scale);
    for (int q = 0; q < rule.size(); ++q) {
      const Eigen::Vector2d ref = rule.points.row(q).transpose();
      const Eigen::Vector2d x = geom.to_physical(ref);
      Eigen::Vector2d u;
      double div_u;
      vel(t, ref, x, u, div_u);
      const Eigen::VectorXd* news[2] = {&tracers_new.H, &tracers_new.A};
      const Eigen::VectorXd* olds[2] = {&tracers_old.H, &tracers_old.A};
      double point_sum = 0;
      for (int k = 0; k < 2; ++k) {
        const double qn = eval_lagrange_value(dm_scalar, *news[k], t, ref)[0];
        const double qo = eval_lagrange_value(dm_scalar, *olds[k], t, ref)[0];
        const Eigen::Vector2d gq =
            eval_lagrange_gradient(dm_scalar, *news[k], t, ref, geom).row(0).transpose();
        const double resid = (qn - qo) / dt + u.dot(gq) + qn * div_u;
        point_sum += resid * resid;
      }
      total += rule.weights[q] * geom.detJ * point_sum;
    }
  }
  return total;
}

}  // namespace icefem
