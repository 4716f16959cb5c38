#pragma once

#include <Eigen/Dense>

namespace icefem {

// Points live on the reference triangle (0,0)-(1,0)-(0,1); weights carry the
// reference measure, so sum(weights) = 1/2 and integral ≈ weights.dot(f(points)).
struct QuadRule {
  Eigen::Matrix<double, Eigen::Dynamic, 2> points;
  Eigen::VectorXd weights;
  int degree = 0;

  int size() const { return static_cast<int>(weights.size()); }
};

// Exact for polynomials up to `order`, order in 1..6. Positive weights only.
QuadRule quadrature(int order);

// Gauss-Legendre on [0,1]; npoints in 1..5, exact degree 2*npoints-1.
struct SegmentRule {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;
};
SegmentRule segment_quadrature(int npoints);

}  // namespace icefem
