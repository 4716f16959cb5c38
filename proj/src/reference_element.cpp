#include "icefem/reference_element.hpp"

#include <cmath>
#include <stdexcept>

#include "icefem/mesh.hpp"
#include "icefem/quadrature.hpp"

namespace icefem {

namespace {

const Eigen::Vector2d kRefVerts[3] = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};

Eigen::Matrix<double, 8, 2> rt1_monomials(const Eigen::Vector2d& p) {
  const double x = p.x(), y = p.y();
  Eigen::Matrix<double, 8, 2> m;
  m << 1, 0,
       x, 0,
       y, 0,
       0, 1,
       0, x,
       0, y,
       x * x, x * y,
       x * y, y * y;
  return m;
}

Eigen::Matrix<double, 8, 1> rt1_monomial_divs(const Eigen::Vector2d& p) {
  Eigen::Matrix<double, 8, 1> d;
  d << 0, 1, 0, 0, 0, 1, 3 * p.x(), 3 * p.y();
  return d;
}

// Inverse-transpose of the dof matrix, so basis i = sum_j C(j,i) * monomial j.
const Eigen::Matrix<double, 8, 8>& rt1_coeffs() {
  static const Eigen::Matrix<double, 8, 8> inv = [] {
    Eigen::Matrix<double, 8, 8> dofs = Eigen::Matrix<double, 8, 8>::Zero();
    const SegmentRule seg = segment_quadrature(3);
    for (int e = 0; e < 3; ++e) {
      const Eigen::Vector2d n = ref_edge_normal(e);
      const double len = ref_edge_length(e);
      for (int q = 0; q < seg.points.size(); ++q) {
        const double s = seg.points[q];
        const double w = seg.weights[q] * len;
        const Eigen::Matrix<double, 8, 1> flux = rt1_monomials(ref_edge_point(e, s)) * n;
        dofs.row(2 * e + 0) += w * flux.transpose();
        dofs.row(2 * e + 1) += w * (2 * s - 1) * flux.transpose();
      }
    }
    const QuadRule tri = quadrature(2);
    for (int q = 0; q < tri.size(); ++q) {
      const Eigen::Matrix<double, 8, 2> m = rt1_monomials(tri.points.row(q).transpose());
      dofs.row(6) += tri.weights[q] * m.col(0).transpose();
      dofs.row(7) += tri.weights[q] * m.col(1).transpose();
    }
    return Eigen::Matrix<double, 8, 8>(dofs.inverse());
  }();
  return inv;
}

}  // namespace

Eigen::Vector2d ref_edge_normal(int edge) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (edge) {
    case 0: return {r, r};
    case 1: return {-1.0, 0.0};
    case 2: return {0.0, -1.0};
  }
  throw std::invalid_argument("ref_edge_normal: edge must be 0, 1 or 2");
}

double ref_edge_length(int edge) {
  if (edge == 0) return std::sqrt(2.0);
  if (edge == 1 || edge == 2) return 1.0;
  throw std::invalid_argument("ref_edge_length: edge must be 0, 1 or 2");
}

Eigen::Vector2d ref_edge_point(int edge, double s) {
  const auto [a, b] = Mesh::local_edges()[edge];
  return (1.0 - s) * kRefVerts[a] + s * kRefVerts[b];
}

int lagrange_ndofs(int degree) {
  if (degree == 1) return 3;
  if (degree == 2) return 6;
  throw std::invalid_argument("lagrange_ndofs: degree must be 1 or 2");
}

int rt_ndofs(int degree) {
  if (degree == 0) return 3;
  if (degree == 1) return 8;
  throw std::invalid_argument("rt_ndofs: degree must be 0 or 1");
}

LagrangeBasis eval_lagrange(int degree, const Eigen::Vector2d& p) {
  const double x = p.x(), y = p.y();
  const double l0 = 1.0 - x - y, l1 = x, l2 = y;
  const Eigen::Vector2d g0(-1, -1), g1(1, 0), g2(0, 1);

  LagrangeBasis b;
  if (degree == 1) {
    b.values.resize(3);
    b.values << l0, l1, l2;
    b.gradients.resize(3, 2);
    b.gradients << g0.transpose(), g1.transpose(), g2.transpose();
    return b;
  }
  if (degree != 2) throw std::invalid_argument("eval_lagrange: degree must be 1 or 2");

  b.values.resize(6);
  b.values << l0 * (2 * l0 - 1), l1 * (2 * l1 - 1), l2 * (2 * l2 - 1),
      4 * l1 * l2, 4 * l0 * l2, 4 * l0 * l1;
  b.gradients.resize(6, 2);
  b.gradients.row(0) = ((4 * l0 - 1) * g0).transpose();
  b.gradients.row(1) = ((4 * l1 - 1) * g1).transpose();
  b.gradients.row(2) = ((4 * l2 - 1) * g2).transpose();
  b.gradients.row(3) = (4 * (l2 * g1 + l1 * g2)).transpose();
  b.gradients.row(4) = (4 * (l2 * g0 + l0 * g2)).transpose();
  b.gradients.row(5) = (4 * (l1 * g0 + l0 * g1)).transpose();
  return b;
}

RtBasis eval_rt(int degree, const Eigen::Vector2d& p) {
  RtBasis b;
  if (degree == 0) {
    b.values.resize(3, 2);
    b.divergences.resize(3);
    for (int i = 0; i < 3; ++i) {
      b.values.row(i) = (p - kRefVerts[i]).transpose();
      b.divergences[i] = 2.0;
    }
    return b;
  }
  if (degree != 1) throw std::invalid_argument("eval_rt: degree must be 0 or 1");

  const auto& C = rt1_coeffs();
  b.values = C.transpose() * rt1_monomials(p);
  b.divergences = C.transpose() * rt1_monomial_divs(p);
  return b;
}

}  // namespace icefem
