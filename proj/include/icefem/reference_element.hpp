#pragma once

#include <Eigen/Dense>

namespace icefem {

struct LagrangeBasis {
  Eigen::VectorXd values;
  Eigen::Matrix<double, Eigen::Dynamic, 2> gradients;
};

// degree 1: vertex dofs (0,0),(1,0),(0,1); degree 2: vertex dofs followed by
// midpoint dofs of edge i opposite vertex i (Mesh::local_edges order).
LagrangeBasis eval_lagrange(int degree, const Eigen::Vector2d& p);

struct RtBasis {
  Eigen::Matrix<double, Eigen::Dynamic, 2> values;  // row i = basis i
  Eigen::VectorXd divergences;
};

// degree 0: one dof per edge, the outward integral flux (edge i opposite
// vertex i); basis i is (p - vertex_i) / (2 |T_ref|).
// degree 1: per edge the flux moments against 1 and 2s-1, s in [0,1] running
// along Mesh::local_edges vertex order, then two interior average moments
// (x then y component); dofs ordered edge-major, interior last.
RtBasis eval_rt(int degree, const Eigen::Vector2d& p);

int lagrange_ndofs(int degree);
int rt_ndofs(int degree);

// Outward unit normals and lengths of the reference-triangle edges.
Eigen::Vector2d ref_edge_normal(int edge);
double ref_edge_length(int edge);
// Point on reference edge at local parameter s in [0,1] (local_edges order).
Eigen::Vector2d ref_edge_point(int edge, double s);

}  // namespace icefem
