#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "icefem/momentum.hpp"

// Dense normal-equation minimizer for momentum problems whose residual is
// affine in the unknowns (linear law, frozen or absent force).  The Jacobian
// is built column by column from residual differences at unit coefficient
// vectors, independent of the sparse assembly path.
inline Eigen::VectorXd dense_surrogate_minimizer(const icefem::MomentumProblem& pb) {
  using namespace icefem;
  std::vector<momentum_detail::QuadPt> pts;
  momentum_detail::walk(pb, [&](const momentum_detail::QuadPt& qp) {
    pts.push_back(qp);
  });

  const int ns = pb.dm_sigma->n_global, nu = pb.dm_u->n_global;
  const int n = ns + nu;
  const int m = 6 * static_cast<int>(pts.size());
  const PhysParamsT<double> prm = pb.params;

  auto residual = [&](const Eigen::VectorXd& c) {
    const Eigen::VectorXd cs = c.head(ns), cu = c.tail(nu);
    Eigen::VectorXd r(m);
    for (size_t k = 0; k < pts.size(); ++k) {
      const auto res = momentum_detail::residuals_at<double>(
          pb, pts[k], prm, cs, cu, pb.state_n.sigma, pb.state_n.u);
      const double sw = std::sqrt(pts[k].w);
      const Eigen::Vector4d rc = flatten(res.Rc);
      for (int j = 0; j < 4; ++j) r[6 * k + j] = sw * rc[j];
      r[6 * k + 4] = sw * res.Rm[0];
      r[6 * k + 5] = sw * res.Rm[1];
    }
    return r;
  };

  const Eigen::VectorXd r0 = residual(Eigen::VectorXd::Zero(n));
  Eigen::MatrixXd J(m, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = 1.0;
    J.col(j) = residual(e) - r0;
  }

  // u = 0 on the boundary: drop those columns, minimize over the rest
  std::vector<char> is_fixed(n, 0);
  for (int d : pb.dm_u->boundary_dofs()) is_fixed[ns + d] = 1;
  std::vector<int> free_ids;
  for (int j = 0; j < n; ++j)
    if (!is_fixed[j]) free_ids.push_back(j);

  Eigen::MatrixXd Jf(m, static_cast<int>(free_ids.size()));
  for (size_t j = 0; j < free_ids.size(); ++j) Jf.col(j) = J.col(free_ids[j]);

  const Eigen::MatrixXd N = Jf.transpose() * Jf;
  const Eigen::VectorXd g = -Jf.transpose() * r0;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(N);
  Eigen::VectorXd xf = ldlt.solve(g);
  xf += ldlt.solve(g - N * xf);  // one refinement step, as the sparse path does

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (size_t j = 0; j < free_ids.size(); ++j) x[free_ids[j]] = xf[j];
  return x;
}
