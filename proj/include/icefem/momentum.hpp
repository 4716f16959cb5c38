#pragma once

#include <functional>
#include <string>
#include <vector>

#include "icefem/assemble.hpp"
#include "icefem/constitutive.hpp"
#include "icefem/dofmap.hpp"
#include "icefem/quadrature.hpp"
#include "icefem/reference_element.hpp"
#include "icefem/sparse_system.hpp"

namespace icefem {

enum class ConstitutiveLaw { ViscousPlastic, Linear };
enum class ForceMode { Full, LinearizedAtZero, None };

struct MomentumState {
  Eigen::VectorXd sigma;  // RT coefficients, 2 tensor rows
  Eigen::VectorXd u;      // Lagrange coefficients, 2 components
};

struct MomentumOpts {
  double theta = 0.5;
  int quad_order = 4;
  double scale = 1.0;
  int trace_factor = 2;
  ConstitutiveLaw law = ConstitutiveLaw::ViscousPlastic;
  ForceMode force_mode = ForceMode::Full;
  double tol = 1e-6;  // relative functional decrease
  int max_iter = 50;
  double armijo_c = 1e-4;
  int max_backtracks = 40;
  SolveOpts solver;
};

using SpatialField = std::function<Eigen::Vector2d(const Eigen::Vector2d&)>;

struct ExternalFields {
  SpatialField wind;    // evaluated at the step's theta-time by the caller
  SpatialField ocean;
  SpatialField source;  // optional manufactured source, may be empty
};

struct MomentumProblem {
  const Mesh* mesh = nullptr;
  const DofMap* dm_sigma = nullptr;   // RavThomas, components = 2
  const DofMap* dm_u = nullptr;       // Lagrange, components = 2
  const DofMap* dm_tracer = nullptr;  // Lagrange P1 scalar
  const Eigen::VectorXd* A1 = nullptr;
  const Eigen::VectorXd* H1 = nullptr;
  MomentumState state_n;
  double dt = 1.0;
  ExternalFields ext;
  PhysParams params;
  MomentumOpts opts;
};

struct GnIter {
  double F = 0;
  double step_norm = 0;
  double alpha = 0;
  SolveStats solve;
};

struct GnReport {
  double F_initial = 0;
  double F_final = 0;
  std::vector<GnIter> iters;
  bool converged = false;
  std::string stop_reason;
};

struct GnStep {
  MomentumState next;
  Eigen::VectorXd delta;  // [sigma; u] update before damping
  double alpha = 0;
  double F_before = 0;
  double F_after = 0;
  double predicted_decrease = 0;  // rhs . delta, >= 0 for SPD systems
  SolveStats solve;
  bool accepted = false;
  // GN model predicts no improvement beyond the relative tolerance;
  // the step is skipped and the state returned unchanged.
  bool at_minimum = false;
};

// Gauss-Newton normal equations at the given state; Dirichlet rows (u = 0 on
// the boundary) are eliminated unless apply_bc is false.
SparseSystem assemble_gn_system(const MomentumProblem& pb, const MomentumState& s,
                                bool apply_bc = true);

double functional_value(const MomentumProblem& pb, const MomentumState& s);

// Momentum and constitutive residual contributions separately (F = F_m + F_c).
std::pair<double, double> functional_parts(const MomentumProblem& pb,
                                           const MomentumState& s);

GnStep gn_step(const MomentumProblem& pb, const MomentumState& s);

std::pair<MomentumState, GnReport> gn_solve(const MomentumProblem& pb,
                                            MomentumState s);

double sigma_symmetry_defect(const MomentumProblem& pb, const MomentumState& s);

namespace momentum_detail {

// Pushed element data at one quadrature point; doubles are exact when cast,
// so templated evaluation stays consistent with the assembled operators.
struct QuadPt {
  int tri = 0;
  double w = 0;
  Eigen::Vector2d x;
  Eigen::VectorXd u_vals;
  Eigen::Matrix<double, Eigen::Dynamic, 2> u_grads;
  Eigen::Matrix<double, Eigen::Dynamic, 2> s_vecs;  // orientation signs folded in
  Eigen::VectorXd s_divs;
  Eigen::VectorXd tr_vals;
  const std::vector<int>* u_gids = nullptr;
  const std::vector<int>* s_gids = nullptr;
  const std::vector<int>* tr_gids = nullptr;
  int n_u_scalar = 0;
  int n_s_scalar = 0;

  template <typename S>
  void eval_u(const Eigen::Matrix<S, Eigen::Dynamic, 1>& c,
              Eigen::Matrix<S, 2, 1>& val, Eigen::Matrix<S, 2, 2>& grad) const {
    val.setZero();
    grad.setZero();
    for (int comp = 0; comp < 2; ++comp)
      for (int i = 0; i < n_u_scalar; ++i) {
        const S ci = c[(*u_gids)[comp * n_u_scalar + i]];
        val[comp] += ci * S(u_vals[i]);
        grad(comp, 0) += ci * S(u_grads(i, 0));
        grad(comp, 1) += ci * S(u_grads(i, 1));
      }
  }

  template <typename S>
  void eval_sigma(const Eigen::Matrix<S, Eigen::Dynamic, 1>& c,
                  Eigen::Matrix<S, 2, 2>& val, Eigen::Matrix<S, 2, 1>& div) const {
    val.setZero();
    div.setZero();
    for (int comp = 0; comp < 2; ++comp)
      for (int i = 0; i < n_s_scalar; ++i) {
        const S ci = c[(*s_gids)[comp * n_s_scalar + i]];
        val(comp, 0) += ci * S(s_vecs(i, 0));
        val(comp, 1) += ci * S(s_vecs(i, 1));
        div[comp] += ci * S(s_divs[i]);
      }
  }

  double eval_tracer(const Eigen::VectorXd& c) const {
    double v = 0;
    for (int i = 0; i < tr_vals.size(); ++i) v += c[(*tr_gids)[i]] * tr_vals[i];
    return v;
  }
};

// Calls fn(const QuadPt&) on every quadrature point of the mesh.
template <typename Fn>
void walk(const MomentumProblem& pb, Fn&& fn) {
  const QuadRule rule = quadrature(pb.opts.quad_order);
  std::vector<LagrangeBasis> u_ref, tr_ref;
  std::vector<RtBasis> s_ref;
  for (int q = 0; q < rule.size(); ++q) {
    const Eigen::Vector2d p = rule.points.row(q).transpose();
    u_ref.push_back(eval_lagrange(pb.dm_u->space.degree, p));
    tr_ref.push_back(eval_lagrange(1, p));
    s_ref.push_back(eval_rt(pb.dm_sigma->space.degree, p));
  }

  QuadPt qp;
  qp.n_u_scalar = pb.dm_u->n_local_scalar;
  qp.n_s_scalar = pb.dm_sigma->n_local_scalar;
  for (int t = 0; t < pb.mesh->n_triangles(); ++t) {
    const GeometryMap geom = geometry_map(*pb.mesh, t, pb.opts.scale);
    qp.tri = t;
    qp.u_gids = &pb.dm_u->tri_gids[t];
    qp.s_gids = &pb.dm_sigma->tri_gids[t];
    qp.tr_gids = &pb.dm_tracer->tri_gids[t];
    const auto& signs = pb.dm_sigma->tri_signs[t];
    for (int q = 0; q < rule.size(); ++q) {
      qp.w = rule.weights[q] * geom.detJ;
      qp.x = geom.to_physical(rule.points.row(q).transpose());
      qp.u_vals = u_ref[q].values;
      qp.u_grads = u_ref[q].gradients * geom.Jinv;
      qp.tr_vals = tr_ref[q].values;
      qp.s_vecs = s_ref[q].values * geom.J.transpose() / geom.detJ;
      qp.s_divs = s_ref[q].divergences / geom.detJ;
      for (int i = 0; i < qp.n_s_scalar; ++i) {
        qp.s_vecs.row(i) *= signs[i];
        qp.s_divs[i] *= signs[i];
      }
      fn(qp);
    }
  }
}

template <typename S>
Eigen::Matrix<S, 2, 1> applied_force(const MomentumProblem& pb,
                                     const Eigen::Vector2d& x,
                                     const Eigen::Matrix<S, 2, 1>& u) {
  if (pb.opts.force_mode == ForceMode::None) return Eigen::Matrix<S, 2, 1>::Zero();
  const PhysParamsT<S> p = pb.params.template cast<S>();
  const Eigen::Matrix<S, 2, 1> va = pb.ext.wind(x).template cast<S>();
  const Eigen::Matrix<S, 2, 1> vo = pb.ext.ocean(x).template cast<S>();
  if (pb.opts.force_mode == ForceMode::Full) return force(u, va, vo, p);
  const Eigen::Matrix<S, 2, 1> zero = Eigen::Matrix<S, 2, 1>::Zero();
  return force(zero, va, vo, p) + jac_force(zero, vo, u, p);
}

template <typename S>
Eigen::Matrix<S, 2, 1> applied_force_jac(const MomentumProblem& pb,
                                         const Eigen::Vector2d& x,
                                         const Eigen::Matrix<S, 2, 1>& u,
                                         const Eigen::Matrix<S, 2, 1>& w) {
  if (pb.opts.force_mode == ForceMode::None) return Eigen::Matrix<S, 2, 1>::Zero();
  const PhysParamsT<S> p = pb.params.template cast<S>();
  const Eigen::Matrix<S, 2, 1> vo = pb.ext.ocean(x).template cast<S>();
  if (pb.opts.force_mode == ForceMode::Full) return jac_force(u, vo, w, p);
  return jac_force(Eigen::Matrix<S, 2, 1>::Zero().eval(), vo, w, p);
}

template <typename S>
Eigen::Matrix<S, 2, 2> law_stress(const MomentumProblem& pb,
                                  const StrainStateT<S>& st, S P) {
  if (pb.opts.law == ConstitutiveLaw::Linear) return st.eps;
  return stress(st, P, pb.opts.trace_factor);
}

template <typename S>
Eigen::Matrix<S, 2, 2> law_jac(const MomentumProblem& pb, const StrainStateT<S>& su,
                               const StrainStateT<S>& sv, S P) {
  if (pb.opts.law == ConstitutiveLaw::Linear) return sv.eps;
  return jac_stress(su, sv, P, pb.opts.trace_factor);
}

template <typename S>
struct Residuals {
  Eigen::Matrix<S, 2, 2> Rc;
  Eigen::Matrix<S, 2, 1> Rm;
  StrainStateT<S> strain_u1;
  Eigen::Matrix<S, 2, 1> u_theta;
  S P;
};

template <typename S>
Residuals<S> residuals_at(const MomentumProblem& pb, const QuadPt& qp,
                          const PhysParamsT<S>& prm,
                          const Eigen::Matrix<S, Eigen::Dynamic, 1>& sigma1,
                          const Eigen::Matrix<S, Eigen::Dynamic, 1>& u1,
                          const Eigen::Matrix<S, Eigen::Dynamic, 1>& sigma_n,
                          const Eigen::Matrix<S, Eigen::Dynamic, 1>& u_n) {
  const S theta = S(pb.opts.theta);
  Residuals<S> r;

  Eigen::Matrix<S, 2, 1> u1v, unv;
  Eigen::Matrix<S, 2, 2> gu1, gun;
  qp.eval_u(u1, u1v, gu1);
  qp.eval_u(u_n, unv, gun);

  Eigen::Matrix<S, 2, 2> s1v, snv;
  Eigen::Matrix<S, 2, 1> s1d, snd;
  qp.eval_sigma(sigma1, s1v, s1d);
  qp.eval_sigma(sigma_n, snv, snd);

  const S A = S(qp.eval_tracer(*pb.A1));
  const S H = S(qp.eval_tracer(*pb.H1));
  r.P = ice_strength(A, H, prm);

  r.strain_u1 = strain(gu1, prm.delta_min);
  r.Rc = s1v - law_stress(pb, r.strain_u1, r.P);

  r.u_theta = theta * u1v + (S(1) - theta) * unv;
  const Eigen::Matrix<S, 2, 1> div_theta = theta * s1d + (S(1) - theta) * snd;
  r.Rm = prm.rho_ice * H * (u1v - unv) / S(pb.dt) +
         applied_force(pb, qp.x, r.u_theta) - div_theta;
  if (pb.ext.source) r.Rm -= pb.ext.source(qp.x).template cast<S>();
  return r;
}

}  // namespace momentum_detail

template <typename S>
S functional_value_t(const MomentumProblem& pb,
                     const Eigen::Matrix<S, Eigen::Dynamic, 1>& sigma1,
                     const Eigen::Matrix<S, Eigen::Dynamic, 1>& u1) {
  const PhysParamsT<S> prm = pb.params.template cast<S>();
  const Eigen::Matrix<S, Eigen::Dynamic, 1> sn = pb.state_n.sigma.template cast<S>();
  const Eigen::Matrix<S, Eigen::Dynamic, 1> un = pb.state_n.u.template cast<S>();
  S total = S(0);
  momentum_detail::walk(pb, [&](const momentum_detail::QuadPt& qp) {
    const auto r = momentum_detail::residuals_at(pb, qp, prm, sigma1, u1, sn, un);
    total += S(qp.w) * (r.Rm.squaredNorm() + r.Rc.squaredNorm());
  });
  return total;
}

// Directional derivative of the functional at (sigma1, u1) along (tau, v),
// by direct quadrature of the linearized residual pairing.
template <typename S>
S first_variation_t(const MomentumProblem& pb,
                    const Eigen::Matrix<S, Eigen::Dynamic, 1>& sigma1,
                    const Eigen::Matrix<S, Eigen::Dynamic, 1>& u1,
                    const Eigen::Matrix<S, Eigen::Dynamic, 1>& tau,
                    const Eigen::Matrix<S, Eigen::Dynamic, 1>& v) {
  const S theta = S(pb.opts.theta);
  const PhysParamsT<S> prm = pb.params.template cast<S>();
  const Eigen::Matrix<S, Eigen::Dynamic, 1> sn = pb.state_n.sigma.template cast<S>();
  const Eigen::Matrix<S, Eigen::Dynamic, 1> un = pb.state_n.u.template cast<S>();
  S total = S(0);
  momentum_detail::walk(pb, [&](const momentum_detail::QuadPt& qp) {
    const auto r = momentum_detail::residuals_at(pb, qp, prm, sigma1, u1, sn, un);

    Eigen::Matrix<S, 2, 1> vv;
    Eigen::Matrix<S, 2, 2> gv;
    qp.eval_u(v, vv, gv);
    Eigen::Matrix<S, 2, 2> tv;
    Eigen::Matrix<S, 2, 1> td;
    qp.eval_sigma(tau, tv, td);

    const StrainStateT<S> sv = strain(gv, prm.delta_min);
    const Eigen::Matrix<S, 2, 2> T =
        tv - momentum_detail::law_jac(pb, r.strain_u1, sv, r.P);

    const S H = S(qp.eval_tracer(*pb.H1));
    const Eigen::Matrix<S, 2, 1> M =
        prm.rho_ice * H * vv / S(pb.dt) +
        theta * momentum_detail::applied_force_jac(pb, qp.x, r.u_theta, vv) -
        theta * td;

    total += S(qp.w) * S(2) *
             (r.Rc.cwiseProduct(T).sum() + r.Rm.dot(M));
  });
  return total;
}

}  // namespace icefem
