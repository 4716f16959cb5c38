#include "icefem/fields.hpp"

#include <stdexcept>

#include "icefem/quadrature.hpp"
#include "icefem/reference_element.hpp"

namespace icefem {

Eigen::VectorXd eval_lagrange_value(const DofMap& dm, const Eigen::VectorXd& coeffs,
                                    int tri, const Eigen::Vector2d& ref) {
  const LagrangeBasis b = eval_lagrange(dm.space.degree, ref);
  const int nls = dm.n_local_scalar, nc = dm.space.components;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(nc);
  const auto& gids = dm.tri_gids[tri];
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < nls; ++i) out[c] += coeffs[gids[c * nls + i]] * b.values[i];
  return out;
}

Eigen::MatrixXd eval_lagrange_gradient(const DofMap& dm, const Eigen::VectorXd& coeffs,
                                       int tri, const Eigen::Vector2d& ref,
                                       const GeometryMap& geom) {
  LagrangeBasis b = eval_lagrange(dm.space.degree, ref);
  b.gradients = (b.gradients * geom.Jinv).eval();
  const int nls = dm.n_local_scalar, nc = dm.space.components;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(nc, 2);
  const auto& gids = dm.tri_gids[tri];
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < nls; ++i)
      out.row(c) += coeffs[gids[c * nls + i]] * b.gradients.row(i);
  return out;
}

Eigen::MatrixXd eval_rt_value(const DofMap& dm, const Eigen::VectorXd& coeffs, int tri,
                              const Eigen::Vector2d& ref, const GeometryMap& geom) {
  const RtBasis b = eval_rt(dm.space.degree, ref);
  const Eigen::Matrix<double, Eigen::Dynamic, 2> vecs =
      b.values * geom.J.transpose() / geom.detJ;
  const int nls = dm.n_local_scalar, nc = dm.space.components;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(nc, 2);
  const auto& gids = dm.tri_gids[tri];
  const auto& signs = dm.tri_signs[tri];
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < nls; ++i) {
      const int l = c * nls + i;
      out.row(c) += coeffs[gids[l]] * signs[l] * vecs.row(i);
    }
  return out;
}

Eigen::VectorXd eval_rt_div(const DofMap& dm, const Eigen::VectorXd& coeffs, int tri,
                            const Eigen::Vector2d& ref, const GeometryMap& geom) {
  const RtBasis b = eval_rt(dm.space.degree, ref);
  const int nls = dm.n_local_scalar, nc = dm.space.components;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(nc);
  const auto& gids = dm.tri_gids[tri];
  const auto& signs = dm.tri_signs[tri];
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < nls; ++i) {
      const int l = c * nls + i;
      out[c] += coeffs[gids[l]] * signs[l] * b.divergences[i] / geom.detJ;
    }
  return out;
}

Eigen::VectorXd interpolate_lagrange(
    const Mesh& mesh, const DofMap& dm, double scale,
    const std::function<Eigen::VectorXd(const Eigen::Vector2d&)>& fn) {
  if (dm.space.family != Family::Lagrange)
    throw std::invalid_argument("interpolate_lagrange: not a Lagrange map");
  const int V = mesh.n_vertices();
  Eigen::VectorXd coeffs(dm.n_global);
  for (int v = 0; v < V; ++v) {
    const Eigen::VectorXd val = fn(scale * mesh.vertices[v]);
    for (int c = 0; c < dm.space.components; ++c) coeffs[c * dm.n_scalar + v] = val[c];
  }
  if (dm.space.degree == 2)
    for (int e = 0; e < mesh.n_edges(); ++e) {
      const Eigen::Vector2d mid =
          0.5 * scale * (mesh.vertices[mesh.edges[e][0]] + mesh.vertices[mesh.edges[e][1]]);
      const Eigen::VectorXd val = fn(mid);
      for (int c = 0; c < dm.space.components; ++c)
        coeffs[c * dm.n_scalar + V + e] = val[c];
    }
  return coeffs;
}

Eigen::VectorXd interpolate_rt(
    const Mesh& mesh, const DofMap& dm, double scale,
    const std::function<Eigen::MatrixXd(const Eigen::Vector2d&)>& fn) {
  if (dm.space.family != Family::RavThomas)
    throw std::invalid_argument("interpolate_rt: not an RT map");
  const int nc = dm.space.components, nls = dm.n_local_scalar;
  const SegmentRule seg = segment_quadrature(5);
  const QuadRule tri_rule = quadrature(4);
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(dm.n_global);

  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const GeometryMap geom = geometry_map(mesh, t, scale);
    // reference moments of the Piola pullback detJ * Jinv * f(F(x))
    Eigen::MatrixXd local = Eigen::MatrixXd::Zero(nc, nls);
    for (int le = 0; le < 3; ++le) {
      const Eigen::Vector2d n = ref_edge_normal(le);
      const double len = ref_edge_length(le);
      for (int q = 0; q < seg.points.size(); ++q) {
        const double s = seg.points[q];
        const double w = seg.weights[q] * len;
        const Eigen::Vector2d ref = ref_edge_point(le, s);
        const Eigen::MatrixXd f = fn(geom.to_physical(ref));  // nc x 2
        for (int c = 0; c < nc; ++c) {
          const Eigen::Vector2d pull =
              geom.detJ * geom.Jinv * f.row(c).transpose();
          const double flux = pull.dot(n);
          if (dm.space.degree == 0) {
            local(c, le) += w * flux;
          } else {
            local(c, 2 * le + 0) += w * flux;
            local(c, 2 * le + 1) += w * (2 * s - 1) * flux;
          }
        }
      }
    }
    if (dm.space.degree == 1)
      for (int q = 0; q < tri_rule.size(); ++q) {
        const Eigen::Vector2d ref = tri_rule.points.row(q).transpose();
        const Eigen::MatrixXd f = fn(geom.to_physical(ref));
        for (int c = 0; c < nc; ++c) {
          const Eigen::Vector2d pull =
              geom.detJ * geom.Jinv * f.row(c).transpose();
          local(c, 6) += tri_rule.weights[q] * pull.x();
          local(c, 7) += tri_rule.weights[q] * pull.y();
        }
      }

    const auto& gids = dm.tri_gids[t];
    const auto& signs = dm.tri_signs[t];
    for (int c = 0; c < nc; ++c)
      for (int i = 0; i < nls; ++i) {
        const int l = c * nls + i;
        coeffs[gids[l]] = signs[l] * local(c, i);
      }
  }
  return coeffs;
}

Eigen::MatrixXd sample_at_vertices(const Mesh& mesh, const DofMap& dm,
                                   const Eigen::VectorXd& coeffs, double scale) {
  const int V = mesh.n_vertices();
  const int nc = dm.space.components;
  if (dm.space.family == Family::Lagrange) {
    Eigen::MatrixXd out(V, nc);
    for (int v = 0; v < V; ++v)
      for (int c = 0; c < nc; ++c) out(v, c) = coeffs[c * dm.n_scalar + v];
    return out;
  }
  const Eigen::Vector2d ref_verts[3] = {{0, 0}, {1, 0}, {0, 1}};
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(V, 2 * nc);
  Eigen::VectorXd count = Eigen::VectorXd::Zero(V);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const GeometryMap geom = geometry_map(mesh, t, scale);
    for (int k = 0; k < 3; ++k) {
      const int v = mesh.triangles[t][k];
      const Eigen::MatrixXd val = eval_rt_value(dm, coeffs, t, ref_verts[k], geom);
      for (int c = 0; c < nc; ++c) out.row(v).segment(2 * c, 2) += val.row(c);
      count[v] += 1;
    }
  }
  for (int v = 0; v < V; ++v) out.row(v) /= count[v];
  return out;
}

double l2_error_lagrange(
    const Mesh& mesh, const DofMap& dm, const Eigen::VectorXd& coeffs, double scale,
    int quad_order,
    const std::function<Eigen::VectorXd(const Eigen::Vector2d&)>& exact) {
  const QuadRule rule = quadrature(quad_order);
  double err2 = 0;
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const GeometryMap geom = geometry_map(mesh, t, scale);
    for (int q = 0; q < rule.size(); ++q) {
      const Eigen::Vector2d ref = rule.points.row(q).transpose();
      const Eigen::VectorXd diff =
          eval_lagrange_value(dm, coeffs, t, ref) - exact(geom.to_physical(ref));
      err2 += rule.weights[q] * geom.detJ * diff.squaredNorm();
    }
  }
  return std::sqrt(err2);
}

}  // namespace icefem
