#include "icefem/sparse_system.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icefem {

void constrain_dofs(SparseSystem& sys, const std::vector<int>& dofs,
                    const Eigen::VectorXd& values) {
  const int n = sys.size();
  std::vector<char> fixed(n, 0);
  Eigen::VectorXd fixed_val = Eigen::VectorXd::Zero(n);
  for (size_t k = 0; k < dofs.size(); ++k) {
    const int d = dofs[k];
    if (d < 0 || d >= n) throw std::out_of_range("constrain_dofs: dof out of range");
    fixed[d] = 1;
    fixed_val[d] = values[static_cast<int>(k)];
  }

  for (int j = 0; j < sys.A.outerSize(); ++j)
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys.A, j); it; ++it)
      if (fixed[it.col()] && !fixed[it.row()])
        sys.b[it.row()] -= it.value() * fixed_val[it.col()];

  std::vector<Eigen::Triplet<double>> keep;
  keep.reserve(static_cast<size_t>(sys.A.nonZeros()));
  for (int j = 0; j < sys.A.outerSize(); ++j)
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys.A, j); it; ++it)
      if (!fixed[it.row()] && !fixed[it.col()])
        keep.emplace_back(it.row(), it.col(), it.value());
  for (int d = 0; d < n; ++d)
    if (fixed[d]) {
      keep.emplace_back(d, d, 1.0);
      sys.b[d] = fixed_val[d];
    }
  sys.A.setZero();
  sys.A.setFromTriplets(keep.begin(), keep.end());
}

void apply_dirichlet(SparseSystem& sys, const DofMap& dm, int offset,
                     const std::vector<std::pair<int, double>>& values) {
  std::vector<char> allowed(dm.n_global, 0);
  for (int d : dm.boundary_dofs()) allowed[d] = 1;

  std::vector<int> dofs;
  Eigen::VectorXd vals(static_cast<int>(values.size()));
  dofs.reserve(values.size());
  int k = 0;
  for (const auto& [d, v] : values) {
    if (d < 0 || d >= dm.n_global || !allowed[d])
      throw std::invalid_argument("apply_dirichlet: dof " + std::to_string(d) +
                                  " is not a boundary dof");
    dofs.push_back(offset + d);
    vals[k++] = v;
  }
  constrain_dofs(sys, dofs, vals);
}

std::vector<std::pair<int, double>> zero_boundary_values(const DofMap& dm) {
  std::vector<std::pair<int, double>> out;
  for (int d : dm.boundary_dofs()) out.emplace_back(d, 0.0);
  return out;
}

namespace {

Eigen::VectorXd equilibration(const Eigen::SparseMatrix<double>& A) {
  Eigen::VectorXd d = A.diagonal();
  for (int i = 0; i < d.size(); ++i)
    d[i] = d[i] > 0 ? 1.0 / std::sqrt(d[i]) : 1.0;
  return d;
}

}  // namespace

Eigen::VectorXd solve_spd(const SparseSystem& sys, SolveStats* stats,
                          const SolveOpts& opts) {
  const int n = sys.size();
  SolveStats local;
  const Eigen::VectorXd d = equilibration(sys.A);
  const Eigen::SparseMatrix<double> As =
      d.asDiagonal() * sys.A * d.asDiagonal();
  const Eigen::VectorXd bs = d.asDiagonal() * sys.b;

  const bool direct = opts.method == SolveOpts::Method::Direct ||
                      (opts.method == SolveOpts::Method::Auto && n <= opts.direct_max_rows);

  Eigen::VectorXd y;
  if (direct) {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(As);
    if (ldlt.info() != Eigen::Success)
      throw std::runtime_error("solve_spd: LDLT factorization failed (matrix not SPD?)");
    y = ldlt.solve(bs);
    for (int k = 0; k < 2; ++k) {
      const Eigen::VectorXd r = bs - As * y;
      y += ldlt.solve(r);
      ++local.refinement_steps;
    }
    local.method = "ldlt";
  } else {
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>,
                             Eigen::Lower | Eigen::Upper,
                             Eigen::DiagonalPreconditioner<double>>
        cg;
    cg.setTolerance(opts.cg_tol);
    cg.setMaxIterations(10L * n);
    cg.compute(As);
    y = cg.solve(bs);
    local.method = "cg";
    local.iterations = static_cast<int>(cg.iterations());
    if (cg.info() != Eigen::Success)
      throw std::runtime_error("solve_spd: CG failed to converge after " +
                               std::to_string(cg.iterations()) + " iterations");
  }

  Eigen::VectorXd x = d.asDiagonal() * y;
  const double bnorm = sys.b.norm();
  local.rel_residual = bnorm > 0 ? (sys.b - sys.A * x).norm() / bnorm : 0.0;
  if (stats) *stats = local;
  return x;
}

}  // namespace icefem
