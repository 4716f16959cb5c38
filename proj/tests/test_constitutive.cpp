#include <random>

#include "doctest.h"
#include "icefem/constitutive.hpp"

using namespace icefem;

TEST_CASE("strain decomposition") {
  const PhysParams p;
  Eigen::Matrix2d G;
  G << 1.0, 2.0, -0.5, 3.0;
  const StrainState s = strain(G, p.delta_min);

  CHECK((s.eps - s.eps.transpose()).norm() == 0.0);
  CHECK(s.eps(0, 0) == doctest::Approx(1.0));
  CHECK(s.eps(0, 1) == doctest::Approx(0.75));
  CHECK(s.tr_eps == doctest::Approx(4.0));
  CHECK(s.dev_eps.trace() == doctest::Approx(0.0).epsilon(1e-15));

  // delta^2 = |dev|^2 + 4 tr^2 + delta_min^2
  const double q = s.dev_eps.squaredNorm() + 4.0 * s.tr_eps * s.tr_eps;
  CHECK(s.delta == doctest::Approx(std::sqrt(q + p.delta_min * p.delta_min)));

  Eigen::Matrix2d bad = G;
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS(strain(bad, p.delta_min));
}

TEST_CASE("rest state identities") {
  const PhysParams p;
  const StrainState rest = strain(Eigen::Matrix2d::Zero().eval(), p.delta_min);
  CHECK(rest.delta == 2e-9);  // exact, no sqrt round-off

  const double P = ice_strength(1.0, 0.3, p);
  CHECK(P == doctest::Approx(8.25e3).epsilon(1e-14));

  for (int tf : {1, 2}) {
    const Eigen::Matrix2d sig = stress(rest, P, tf);
    CHECK((sig + 0.5 * P * Eigen::Matrix2d::Identity()).norm() <=
          1e-12 * sig.norm());
  }
}

TEST_CASE("ice strength") {
  const PhysParams p;
  CHECK(ice_strength(1.0, 1.0, p) == doctest::Approx(p.P_star));
  CHECK(ice_strength(0.5, 1.0, p) ==
        doctest::Approx(p.P_star * std::exp(-10.0)).epsilon(1e-14));
  CHECK(ice_strength(0.3, 0.0, p) == 0.0);
  CHECK_THROWS(ice_strength(-0.1, 1.0, p));
  CHECK_THROWS(ice_strength(1.1, 1.0, p));
  CHECK_THROWS(ice_strength(0.5, -1.0, p));
}

TEST_CASE("stress hand value") {
  const PhysParams p;
  Eigen::Matrix2d G;
  G << 2.0, 0.0, 0.0, 0.0;  // eps = diag(2, 0), dev = diag(1, -1), tr = 2
  const StrainState s = strain(G, p.delta_min);
  const double delta = std::sqrt(2.0 + 16.0 + p.delta_min * p.delta_min);
  CHECK(s.delta == doctest::Approx(delta));

  const double P = 1000.0;
  const Eigen::Matrix2d sig = stress(s, P, 2);
  CHECK(sig(0, 0) == doctest::Approx(0.5 * P * ((1.0 + 4.0) / delta - 1.0)));
  CHECK(sig(1, 1) == doctest::Approx(0.5 * P * ((-1.0 + 4.0) / delta - 1.0)));
  CHECK(sig(0, 1) == doctest::Approx(0.0));

  // trace_factor enters only through tr eps
  const Eigen::Matrix2d sig1 = stress(s, P, 1);
  CHECK(sig(0, 0) - sig1(0, 0) == doctest::Approx(0.5 * P * 2.0 / delta));
}

TEST_CASE("force hand values") {
  const PhysParams p;
  const Eigen::Vector2d zero = Eigen::Vector2d::Zero();

  // u = (1,0), calm wind and ocean: -rho_o C_o |v_o-u| (v_o-u) points along +x
  const Eigen::Vector2d f = force<double>({1, 0}, zero, zero, p);
  CHECK(f[0] == doctest::Approx(p.rho_o * p.C_o).epsilon(1e-14));
  CHECK(f[1] == doctest::Approx(p.f_c).epsilon(1e-14));

  // pure wind drag, quadratic in the wind speed
  const Eigen::Vector2d g = force<double>(zero, {2, 0}, zero, p);
  CHECK(g[0] == doctest::Approx(-4.0 * p.rho_a * p.C_a).epsilon(1e-14));
  CHECK(g[1] == doctest::Approx(0.0));
}

TEST_CASE("jacobian identities") {
  const PhysParams p;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  for (int k = 0; k < 20; ++k) {
    Eigen::Matrix2d G, D1, D2;
    G << uni(rng), uni(rng), uni(rng), uni(rng);
    D1 << uni(rng), uni(rng), uni(rng), uni(rng);
    D2 << uni(rng), uni(rng), uni(rng), uni(rng);
    const StrainState su = strain(G, p.delta_min);
    const StrainState s1 = strain(D1, p.delta_min);
    const StrainState s2 = strain(D2, p.delta_min);
    const StrainState s12 = strain(Eigen::Matrix2d(D1 + 2.0 * D2), p.delta_min);

    // linearity in the direction argument
    CHECK(jac_delta_inv(su, s12) ==
          doctest::Approx(jac_delta_inv(su, s1) + 2.0 * jac_delta_inv(su, s2))
              .epsilon(1e-12));
    const Eigen::Matrix2d lin = jac_stress(su, s1, 500.0, 2) +
                                2.0 * jac_stress(su, s2, 500.0, 2);
    CHECK((jac_stress(su, s12, 500.0, 2) - lin).norm() < 1e-10 * lin.norm());

    // d(1/delta) along the state itself: -(delta^2 - delta_min^2)/delta^3
    const double self = jac_delta_inv(su, su);
    const double expect = -(su.delta * su.delta - p.delta_min * p.delta_min) /
                          (su.delta * su.delta * su.delta);
    CHECK(self == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("jac_force at the regularization point") {
  const PhysParams p;
  // u = v_o kills the drag linearization except through the regularized term
  const Eigen::Vector2d vo(0.3, -0.2), w(1.0, 2.0);
  const Eigen::Vector2d j = jac_force<double>(vo, vo, w, p);
  CHECK((j - p.f_c * perp<double>(w)).norm() == 0.0);
}

TEST_CASE("flatten round trip") {
  Eigen::Matrix2d m;
  m << 1, 2, 3, 4;
  const Eigen::Vector4d v = flatten(m);
  CHECK(v[0] == 1);
  CHECK(v[1] == 2);
  CHECK(v[2] == 3);
  CHECK(v[3] == 4);
  CHECK((unflatten(v) - m).norm() == 0.0);

  Eigen::Matrix2d a, b;
  a << 1, -2, 0.5, 3;
  b << -1, 4, 2, 0.25;
  CHECK(flatten(a).dot(flatten(b)) ==
        doctest::Approx(a.cwiseProduct(b).sum()).epsilon(1e-15));
}
