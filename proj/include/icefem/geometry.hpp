#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "icefem/mesh.hpp"

namespace icefem {

struct GeometryMap {
  Eigen::Vector2d origin;
  Eigen::Matrix2d J;
  Eigen::Matrix2d Jinv;
  double detJ = 0.0;

  Eigen::Vector2d to_physical(const Eigen::Vector2d& ref) const {
    return origin + J * ref;
  }
};

// scale maps the stored unit-square mesh to a physical square of side
// `scale` meters.
inline GeometryMap geometry_map(const Mesh& mesh, int t, double scale = 1.0) {
  const auto& tri = mesh.triangles[t];
  GeometryMap g;
  g.origin = scale * mesh.vertices[tri[0]];
  g.J.col(0) = scale * (mesh.vertices[tri[1]] - mesh.vertices[tri[0]]);
  g.J.col(1) = scale * (mesh.vertices[tri[2]] - mesh.vertices[tri[0]]);
  g.detJ = g.J.determinant();
  if (!(g.detJ > 0))
    throw std::invalid_argument("geometry_map: non-positive Jacobian determinant");
  g.Jinv = g.J.inverse();
  return g;
}

// Contravariant Piola transform, in place: v = J v_ref / detJ, div = div_ref / detJ.
inline void piola_push(const GeometryMap& map,
                       Eigen::Matrix<double, Eigen::Dynamic, 2>& values,
                       Eigen::VectorXd& divergences) {
  values = (values * map.J.transpose()).eval() / map.detJ;
  divergences /= map.detJ;
}

// Physical gradients from reference ones: grad = J^{-T} grad_ref.
inline void push_gradients(const GeometryMap& map,
                           Eigen::Matrix<double, Eigen::Dynamic, 2>& gradients) {
  gradients = (gradients * map.Jinv).eval();
}

}  // namespace icefem
