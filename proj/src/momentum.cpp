#include "icefem/momentum.hpp"

#include <cmath>
#include <stdexcept>

#include "icefem/fields.hpp"

namespace icefem {

using momentum_detail::applied_force_jac;
using momentum_detail::law_jac;
using momentum_detail::residuals_at;

SparseSystem assemble_gn_system(const MomentumProblem& pb, const MomentumState& s,
                                bool apply_bc) {
  const int n_s = pb.dm_sigma->n_global;
  const int nls = pb.dm_sigma->n_local_scalar;
  const int nlu = pb.dm_u->n_local_scalar;
  const double theta = pb.opts.theta;
  const PhysParamsT<double> prm = pb.params;

  const std::vector<LsBlock> blocks = {{pb.dm_sigma, 0}, {pb.dm_u, n_s}};
  SparseSystem sys = assemble_ls(
      *pb.mesh, pb.opts.scale, blocks, 6, pb.opts.quad_order,
      [&](const QuadPointCtx& ctx, Eigen::MatrixXd& L, Eigen::VectorXd& r) {
        const BasisAtPoint& sb = (*ctx.basis)[0];
        const BasisAtPoint& ub = (*ctx.basis)[1];

        // residual at the current iterate
        momentum_detail::QuadPt qp;
        qp.tri = ctx.tri;
        qp.w = ctx.weight;
        qp.x = ctx.x;
        qp.u_vals = ub.values;
        qp.u_grads = ub.grads;
        qp.s_vecs = sb.vecs;
        qp.s_divs = sb.divs;
        const LagrangeBasis tr = eval_lagrange(1, ctx.ref);
        qp.tr_vals = tr.values;
        qp.u_gids = &pb.dm_u->tri_gids[ctx.tri];
        qp.s_gids = &pb.dm_sigma->tri_gids[ctx.tri];
        qp.tr_gids = &pb.dm_tracer->tri_gids[ctx.tri];
        qp.n_u_scalar = nlu;
        qp.n_s_scalar = nls;
        const auto res =
            residuals_at<double>(pb, qp, prm, s.sigma, s.u, pb.state_n.sigma, pb.state_n.u);

        const Eigen::Vector4d rc = flatten(res.Rc);
        for (int k = 0; k < 4; ++k) r[k] = rc[k];
        r[4] = res.Rm[0];
        r[5] = res.Rm[1];

        const double H = qp.eval_tracer(*pb.H1);
        const double mass = prm.rho_ice * H / pb.dt;

        // sigma columns: tensor row comp gets the RT vector, momentum row the div
        for (int comp = 0; comp < 2; ++comp)
          for (int i = 0; i < nls; ++i) {
            const int col = comp * nls + i;
            L(2 * comp + 0, col) = sb.vecs(i, 0);
            L(2 * comp + 1, col) = sb.vecs(i, 1);
            L(4 + comp, col) = -theta * sb.divs[i];
          }

        // u columns: direction phi_i e_comp
        const int u0 = 2 * nls;
        for (int comp = 0; comp < 2; ++comp)
          for (int i = 0; i < nlu; ++i) {
            const int col = u0 + comp * nlu + i;
            Eigen::Matrix2d gv = Eigen::Matrix2d::Zero();
            gv.row(comp) = ub.grads.row(i);
            const StrainState sv = strain<double>(gv, prm.delta_min);
            const Eigen::Vector4d jc =
                flatten<double>(law_jac<double>(pb, res.strain_u1, sv, res.P));
            for (int k = 0; k < 4; ++k) L(k, col) = -jc[k];

            Eigen::Vector2d w = Eigen::Vector2d::Zero();
            w[comp] = ub.values[i];
            const Eigen::Vector2d jf =
                applied_force_jac<double>(pb, ctx.x, res.u_theta, w);
            L(4, col) = mass * w[0] + theta * jf[0];
            L(5, col) = mass * w[1] + theta * jf[1];
          }
      });

  if (apply_bc) apply_dirichlet(sys, *pb.dm_u, n_s, zero_boundary_values(*pb.dm_u));
  return sys;
}

double functional_value(const MomentumProblem& pb, const MomentumState& s) {
  return functional_value_t<double>(pb, s.sigma, s.u);
}

std::pair<double, double> functional_parts(const MomentumProblem& pb,
                                           const MomentumState& s) {
  const PhysParamsT<double> prm = pb.params;
  double fm = 0, fc = 0;
  momentum_detail::walk(pb, [&](const momentum_detail::QuadPt& qp) {
    const auto r = residuals_at<double>(pb, qp, prm, s.sigma, s.u,
                                        pb.state_n.sigma, pb.state_n.u);
    fm += qp.w * r.Rm.squaredNorm();
    fc += qp.w * r.Rc.squaredNorm();
  });
  return {fm, fc};
}

double sigma_symmetry_defect(const MomentumProblem& pb, const MomentumState& s) {
  double defect = 0;
  const Eigen::Matrix<double, Eigen::Dynamic, 1>& c = s.sigma;
  momentum_detail::walk(pb, [&](const momentum_detail::QuadPt& qp) {
    Eigen::Matrix2d val;
    Eigen::Vector2d div;
    qp.eval_sigma<double>(c, val, div);
    const double d = val(0, 1) - val(1, 0);
    defect += qp.w * d * d;
  });
  return defect;
}

GnStep gn_step(const MomentumProblem& pb, const MomentumState& s) {
  GnStep step;
  step.F_before = functional_value(pb, s);

  SparseSystem sys = assemble_gn_system(pb, s, true);
  step.delta = solve_spd(sys, &step.solve, pb.opts.solver);
  step.predicted_decrease = sys.b.dot(step.delta);

  if (step.predicted_decrease <=
      std::max(pb.opts.tol * step.F_before, 1e-30)) {
    step.next = s;
    step.F_after = step.F_before;
    step.at_minimum = true;
    step.accepted = true;
    return step;
  }

  const int n_s = pb.dm_sigma->n_global;
  const Eigen::VectorXd dsig = step.delta.head(n_s);
  const Eigen::VectorXd du = step.delta.tail(pb.dm_u->n_global);

  const double dF = -2.0 * step.predicted_decrease;
  double alpha = 1.0;
  for (int bt = 0; bt <= pb.opts.max_backtracks; ++bt) {
    MomentumState trial;
    trial.sigma = s.sigma + alpha * dsig;
    trial.u = s.u + alpha * du;
    const double F_trial = functional_value(pb, trial);
    if (std::isfinite(F_trial) &&
        F_trial <= step.F_before + pb.opts.armijo_c * alpha * dF) {
      step.next = std::move(trial);
      step.F_after = F_trial;
      step.alpha = alpha;
      step.accepted = true;
      return step;
    }
    alpha *= 0.5;
  }
  step.next = s;
  step.F_after = step.F_before;
  step.alpha = 0;
  step.accepted = false;
  return step;
}

std::pair<MomentumState, GnReport> gn_solve(const MomentumProblem& pb,
                                            MomentumState s) {
  GnReport rep;
  rep.F_initial = functional_value(pb, s);
  double F_cur = rep.F_initial;

  for (int k = 0; k < pb.opts.max_iter; ++k) {
    GnStep step = gn_step(pb, s);

    if (step.at_minimum) {
      rep.converged = true;
      rep.stop_reason = "stationary";
      break;
    }
    if (!step.accepted) {
      rep.converged = false;
      rep.stop_reason = "line_search";
      break;
    }

    s = std::move(step.next);
    GnIter it;
    it.F = step.F_after;
    it.alpha = step.alpha;
    it.step_norm = step.alpha * step.delta.norm();
    it.solve = step.solve;
    rep.iters.push_back(it);

    const double decrease = F_cur - step.F_after;
    F_cur = step.F_after;
    if (decrease <= pb.opts.tol * std::max(F_cur + decrease, 1e-300)) {
      rep.converged = true;
      rep.stop_reason = "ftol";
      break;
    }
  }
  if (rep.stop_reason.empty()) {
    rep.converged = false;
    rep.stop_reason = "max_iter";
  }
  rep.F_final = F_cur;
  return {std::move(s), rep};
}

}  // namespace icefem
