#pragma once

#include <Eigen/Sparse>
#include <string>
#include <utility>
#include <vector>

#include "icefem/dofmap.hpp"

namespace icefem {

struct SparseSystem {
  Eigen::SparseMatrix<double> A;
  Eigen::VectorXd b;

  int size() const { return static_cast<int>(b.size()); }
};

struct SolveStats {
  std::string method;
  int iterations = 0;        // CG only
  int refinement_steps = 0;  // direct only
  double rel_residual = 0.0;
};

struct SolveOpts {
  enum class Method { Auto, Direct, CG };
  Method method = Method::Auto;
  double cg_tol = 1e-10;
  int direct_max_rows = 150000;  // Auto picks the direct factorization below this
};

// Symmetric elimination of the listed dofs: rhs -= A col * value, rows and
// columns zeroed, unit diagonal, rhs entry set to the value.
void constrain_dofs(SparseSystem& sys, const std::vector<int>& dofs,
                    const Eigen::VectorXd& values);

// Prescribes values on dofs of `dm`, whose block starts at `offset` in the
// assembled system. Each pair is (dof index within the block, value); throws
// if the dof is not a boundary dof of the map.
void apply_dirichlet(SparseSystem& sys, const DofMap& dm, int offset,
                     const std::vector<std::pair<int, double>>& values);

// (dof, 0) pairs covering every boundary dof of the map, all components.
std::vector<std::pair<int, double>> zero_boundary_values(const DofMap& dm);

// Solves the SPD system with diagonal equilibration; direct LDLT plus
// iterative refinement, or Jacobi-preconditioned CG past the size threshold.
// Throws on factorization breakdown and on CG non-convergence.
Eigen::VectorXd solve_spd(const SparseSystem& sys, SolveStats* stats = nullptr,
                          const SolveOpts& opts = {});

}  // namespace icefem
