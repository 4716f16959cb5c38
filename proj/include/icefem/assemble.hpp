#pragma once

#include <functional>
#include <vector>

#include "icefem/dofmap.hpp"
#include "icefem/geometry.hpp"
#include "icefem/quadrature.hpp"
#include "icefem/sparse_system.hpp"

namespace icefem {

struct LsBlock {
  const DofMap* dofmap = nullptr;
  int offset = 0;
};

// Single-component basis of one block at one quadrature point, already in
// physical coordinates. RT entries carry the orientation signs, so a column
// multiplies the global coefficient directly.
struct BasisAtPoint {
  Eigen::VectorXd values;                           // Lagrange
  Eigen::Matrix<double, Eigen::Dynamic, 2> grads;   // Lagrange
  Eigen::Matrix<double, Eigen::Dynamic, 2> vecs;    // RT
  Eigen::VectorXd divs;                             // RT
};

struct QuadPointCtx {
  int tri = 0;
  Eigen::Vector2d ref;
  Eigen::Vector2d x;
  double weight = 0;  // quadrature weight times detJ
  const GeometryMap* geom = nullptr;
  const std::vector<BasisAtPoint>* basis = nullptr;  // one per block
};

// Fills the operator rows L (m x n_local_total, zero on entry) applied to
// every local basis function, and the current residual r (m). Columns follow
// block order; within a block, component-major dofmap order.
using LsIntegrand =
    std::function<void(const QuadPointCtx&, Eigen::MatrixXd&, Eigen::VectorXd&)>;

// Least-squares normal equations: A += w L^T L, b -= w L^T r, summed over
// quadrature points of every triangle (or the given subset).
SparseSystem assemble_ls(const Mesh& mesh, double scale,
                         const std::vector<LsBlock>& blocks, int n_rows,
                         int quad_order, const LsIntegrand& integrand,
                         const std::vector<int>* tri_subset = nullptr);

// Plain quadrature of a pointwise function over the mesh.
double integrate(const Mesh& mesh, double scale, int quad_order,
                 const std::function<double(int tri, const Eigen::Vector2d& ref,
                                            const Eigen::Vector2d& x)>& f);

}  // namespace icefem
