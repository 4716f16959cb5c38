#include "icefem/quadrature.hpp"

#include <stdexcept>
#include <vector>

namespace icefem {

namespace {

struct BaryGroup {
  double a, w;          // permutations of (a, b, b), b = (1-a)/2
  bool full6 = false;   // six permutations of (a, b, c)
  double b = 0;
};

void append_group(std::vector<Eigen::Vector2d>& pts, std::vector<double>& wts,
                  const BaryGroup& g) {
  auto push = [&](double l1, double l2, double l3, double w) {
    // barycentric (l1,l2,l3) -> reference (x,y) with vertices (0,0),(1,0),(0,1)
    pts.emplace_back(l2, l3);
    wts.push_back(0.5 * w);
    (void)l1;
  };
  if (g.full6) {
    const double c = 1.0 - g.a - g.b;
    push(g.a, g.b, c, g.w);
    push(g.a, c, g.b, g.w);
    push(g.b, g.a, c, g.w);
    push(g.b, c, g.a, g.w);
    push(c, g.a, g.b, g.w);
    push(c, g.b, g.a, g.w);
  } else if (g.a == 1.0 / 3.0) {
    push(g.a, g.a, g.a, g.w);
  } else {
    const double b = (1.0 - g.a) / 2.0;
    push(g.a, b, b, g.w);
    push(b, g.a, b, g.w);
    push(b, b, g.a, g.w);
  }
}

}  // namespace

QuadRule quadrature(int order) {
  std::vector<BaryGroup> groups;
  int degree = order;
  switch (order) {
    case 1:
      groups = {{1.0 / 3.0, 1.0}};
      break;
    case 2:
      groups = {{2.0 / 3.0, 1.0 / 3.0}};
      break;
    case 3:
    case 4:
      // Dunavant degree-4 rule; also used for degree 3 (the classical 4-point
      // degree-3 rule has a negative centroid weight).
      groups = {{0.816847572980459, 0.109951743655322},
                {0.108103018168070, 0.223381589678011}};
      degree = 4;
      break;
    case 5:
      groups = {{1.0 / 3.0, 0.225},
                {0.797426985353087, 0.125939180544827},
                {0.059715871789770, 0.132394152788506}};
      break;
    case 6:
      groups = {{0.873821971016996, 0.050844906370207},
                {0.501426509658179, 0.116786275726379},
                {0.636502499121399, 0.082851075618374, true, 0.310352451033785}};
      break;
    default:
      throw std::invalid_argument("quadrature: order must be in 1..6");
  }

  std::vector<Eigen::Vector2d> pts;
  std::vector<double> wts;
  for (const auto& g : groups) append_group(pts, wts, g);

  QuadRule rule;
  rule.degree = degree;
  rule.points.resize(static_cast<int>(pts.size()), 2);
  rule.weights.resize(static_cast<int>(wts.size()));
  for (int i = 0; i < rule.size(); ++i) {
    rule.points.row(i) = pts[i].transpose();
    rule.weights[i] = wts[i];
  }
  return rule;
}

SegmentRule segment_quadrature(int npoints) {
  Eigen::VectorXd x, w;  // on [-1,1]
  switch (npoints) {
    case 1:
      x.resize(1);
      w.resize(1);
      x << 0.0;
      w << 2.0;
      break;
    case 2:
      x.resize(2);
      w.resize(2);
      x << -0.5773502691896257, 0.5773502691896257;
      w << 1.0, 1.0;
      break;
    case 3:
      x.resize(3);
      w.resize(3);
      x << -0.7745966692414834, 0.0, 0.7745966692414834;
      w << 5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0;
      break;
    case 4:
      x.resize(4);
      w.resize(4);
      x << -0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
          0.8611363115940526;
      w << 0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
          0.3478548451374538;
      break;
    case 5:
      x.resize(5);
      w.resize(5);
      x << -0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
          0.9061798459386640;
      w << 0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
          0.4786286704993665, 0.2369268850561891;
      break;
    default:
      throw std::invalid_argument("segment_quadrature: npoints must be in 1..5");
  }
  SegmentRule rule;
  rule.points = (x.array() + 1.0) * 0.5;
  rule.weights = w * 0.5;
  return rule;
}

}  // namespace icefem
