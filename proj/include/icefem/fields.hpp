#pragma once

#include <functional>

#include "icefem/dofmap.hpp"
#include "icefem/geometry.hpp"

namespace icefem {

// Coefficient-vector field evaluation at a reference point of one triangle.
Eigen::VectorXd eval_lagrange_value(const DofMap& dm, const Eigen::VectorXd& coeffs,
                                    int tri, const Eigen::Vector2d& ref);
// rows = components, cols = d/dx, d/dy (physical)
Eigen::MatrixXd eval_lagrange_gradient(const DofMap& dm, const Eigen::VectorXd& coeffs,
                                       int tri, const Eigen::Vector2d& ref,
                                       const GeometryMap& geom);
// rows = components (RT vector fields), cols = x,y
Eigen::MatrixXd eval_rt_value(const DofMap& dm, const Eigen::VectorXd& coeffs, int tri,
                              const Eigen::Vector2d& ref, const GeometryMap& geom);
Eigen::VectorXd eval_rt_div(const DofMap& dm, const Eigen::VectorXd& coeffs, int tri,
                            const Eigen::Vector2d& ref, const GeometryMap& geom);

// Nodal interpolation; fn maps a physical point to the component values.
Eigen::VectorXd interpolate_lagrange(
    const Mesh& mesh, const DofMap& dm, double scale,
    const std::function<Eigen::VectorXd(const Eigen::Vector2d&)>& fn);

// Edge-flux (and RT1 interior) moment interpolation; fn maps a physical
// point to a components x 2 matrix, one vector field per row.
Eigen::VectorXd interpolate_rt(
    const Mesh& mesh, const DofMap& dm, double scale,
    const std::function<Eigen::MatrixXd(const Eigen::Vector2d&)>& fn);

// Vertex samples for output: Lagrange gives n_vertices x components, RT gives
// n_vertices x 2*components (adjacent-triangle average).
Eigen::MatrixXd sample_at_vertices(const Mesh& mesh, const DofMap& dm,
                                   const Eigen::VectorXd& coeffs, double scale);

double l2_error_lagrange(
    const Mesh& mesh, const DofMap& dm, const Eigen::VectorXd& coeffs, double scale,
    int quad_order,
    const std::function<Eigen::VectorXd(const Eigen::Vector2d&)>& exact);

}  // namespace icefem
