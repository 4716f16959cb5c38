#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "icefem/assemble.hpp"

using namespace icefem;

namespace {

// LS projection onto P1: minimize ||q - f||^2
SparseSystem projection_system(const Mesh& mesh, const DofMap& dm, double scale,
                               const std::function<double(const Eigen::Vector2d&)>& f,
                               const std::vector<int>* subset = nullptr) {
  return assemble_ls(
      mesh, scale, {{&dm, 0}}, 1, 4,
      [&](const QuadPointCtx& ctx, Eigen::MatrixXd& L, Eigen::VectorXd& r) {
        const BasisAtPoint& b = (*ctx.basis)[0];
        for (int i = 0; i < b.values.size(); ++i) L(0, i) = b.values[i];
        r[0] = -f(ctx.x);
      },
      subset);
}

}  // namespace

TEST_CASE("mass system and constant projection") {
  const Mesh mesh = build_structured(3);
  const DofMap dm = build_dofmap(mesh, {Family::Lagrange, 1, 1});
  const SparseSystem sys =
      projection_system(mesh, dm, 1.0, [](const Eigen::Vector2d&) { return 2.5; });

  // mass matrix rows sum to the basis integrals, total the domain area
  const Eigen::MatrixXd A(sys.A);
  CHECK((A - A.transpose()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(A.sum() == doctest::Approx(1.0).epsilon(1e-13));

  const Eigen::VectorXd x = solve_spd(sys);
  CHECK((x.array() - 2.5).abs().maxCoeff() < 1e-12);

  // linear functions are reproduced too
  const SparseSystem lin = projection_system(
      mesh, dm, 1.0, [](const Eigen::Vector2d& p) { return 3.0 * p.x() - p.y(); });
  const Eigen::VectorXd xl = solve_spd(lin);
  for (int v = 0; v < mesh.n_vertices(); ++v)
    CHECK(xl[v] == doctest::Approx(3.0 * mesh.vertices[v].x() -
                                   mesh.vertices[v].y())
                       .epsilon(1e-11));
}

TEST_CASE("assembly is additive over triangle subsets") {
  const Mesh mesh = build_structured(2);
  const DofMap dm = build_dofmap(mesh, {Family::Lagrange, 1, 1});
  auto f = [](const Eigen::Vector2d& p) { return p.x() * p.y(); };

  std::vector<int> first, second;
  for (int t = 0; t < mesh.n_triangles(); ++t)
    (t % 2 ? first : second).push_back(t);

  const SparseSystem full = projection_system(mesh, dm, 1.0, f);
  const SparseSystem a = projection_system(mesh, dm, 1.0, f, &first);
  const SparseSystem b = projection_system(mesh, dm, 1.0, f, &second);
  CHECK((Eigen::MatrixXd(full.A) - Eigen::MatrixXd(a.A) - Eigen::MatrixXd(b.A))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CHECK((full.b - a.b - b.b).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("normal equations are positive semidefinite") {
  const Mesh mesh = build_structured(2);
  const DofMap dm = build_dofmap(mesh, {Family::RavThomas, 0, 1});

  // ||div sigma||^2: kernel = divergence-free RT0 fields, dimension E - T
  const SparseSystem sys = assemble_ls(
      mesh, 1.0, {{&dm, 0}}, 1, 2,
      [&](const QuadPointCtx& ctx, Eigen::MatrixXd& L, Eigen::VectorXd&) {
        const BasisAtPoint& b = (*ctx.basis)[0];
        for (int i = 0; i < b.divs.size(); ++i) L(0, i) = b.divs[i];
      });

  const Eigen::MatrixXd A(sys.A);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(A);
  CHECK(eig.eigenvalues().minCoeff() > -1e-12);

  const double tol = 1e-10 * eig.eigenvalues().maxCoeff();
  const int kernel_dim = (eig.eigenvalues().array() < tol).count();
  CHECK(kernel_dim == mesh.n_edges() - mesh.n_triangles());

  const int rank = Eigen::FullPivLU<Eigen::MatrixXd>(A).rank();
  CHECK(rank == mesh.n_triangles());
}

TEST_CASE("solve_spd against a dense oracle") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = 50;
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = uni(rng);
  const Eigen::MatrixXd Ad = M.transpose() * M + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b[i] = uni(rng);

  SparseSystem sys;
  sys.A = Ad.sparseView();
  sys.b = b;
  const Eigen::VectorXd ref = Eigen::LDLT<Eigen::MatrixXd>(Ad).solve(b);

  SolveOpts direct;
  direct.method = SolveOpts::Method::Direct;
  SolveStats st;
  const Eigen::VectorXd xd = solve_spd(sys, &st, direct);
  CHECK((xd - ref).norm() < 1e-10 * ref.norm());
  CHECK(st.method == "ldlt");

  SolveOpts cg;
  cg.method = SolveOpts::Method::CG;
  cg.cg_tol = 1e-13;
  const Eigen::VectorXd xc = solve_spd(sys, &st, cg);
  CHECK((xc - ref).norm() < 1e-7 * ref.norm());
  CHECK(st.method == "cg");
  CHECK(st.iterations > 0);
}

TEST_CASE("solve_spd 2x2 hand check") {
  SparseSystem sys;
  Eigen::MatrixXd A(2, 2);
  A << 2, 1, 1, 3;
  sys.A = A.sparseView();
  sys.b = Eigen::Vector2d(1, 2);
  const Eigen::VectorXd x = solve_spd(sys);
  CHECK(x[0] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("dirichlet elimination") {
  const Mesh mesh = build_structured(2);
  const DofMap dm = build_dofmap(mesh, {Family::Lagrange, 1, 1});
  auto f = [](const Eigen::Vector2d& p) { return p.x() + 2.0 * p.y(); };

  SparseSystem sys = projection_system(mesh, dm, 1.0, f);
  const Eigen::MatrixXd A0(sys.A);
  const Eigen::VectorXd b0 = sys.b;

  const auto bvals = zero_boundary_values(dm);
  CHECK(bvals.size() == dm.boundary_dofs().size());
  apply_dirichlet(sys, dm, 0, bvals);

  const Eigen::VectorXd x = solve_spd(sys);
  std::vector<char> constrained(dm.n_global, 0);
  for (const auto& [d, v] : bvals) {
    CHECK(x[d] == v);
    constrained[d] = 1;
  }

  // free dofs solve the reduced dense system
  std::vector<int> free_ids;
  for (int i = 0; i < dm.n_global; ++i)
    if (!constrained[i]) free_ids.push_back(i);
  const int nf = static_cast<int>(free_ids.size());
  REQUIRE(nf == 1);  // only the center vertex is interior on n=2
  Eigen::MatrixXd Af(nf, nf);
  Eigen::VectorXd bf(nf);
  for (int i = 0; i < nf; ++i) {
    bf[i] = b0[free_ids[i]];
    for (int j = 0; j < nf; ++j) Af(i, j) = A0(free_ids[i], free_ids[j]);
  }
  const Eigen::VectorXd xf = Af.ldlt().solve(bf);
  for (int i = 0; i < nf; ++i)
    CHECK(x[free_ids[i]] == doctest::Approx(xf[i]).epsilon(1e-12));

  // symmetry survives the elimination
  const Eigen::MatrixXd Ac(sys.A);
  CHECK((Ac - Ac.transpose()).cwiseAbs().maxCoeff() < 1e-15);

  SparseSystem sys2 = projection_system(mesh, dm, 1.0, f);
  CHECK_THROWS(apply_dirichlet(sys2, dm, 0, {{4, 0.0}}));  // interior vertex
}

TEST_CASE("constrain_dofs moves values to the rhs") {
  SparseSystem sys;
  Eigen::MatrixXd A(3, 3);
  A << 4, 1, 0, 1, 5, 2, 0, 2, 6;
  sys.A = A.sparseView();
  sys.b = Eigen::Vector3d(1, 1, 1);
  constrain_dofs(sys, {1}, Eigen::VectorXd::Constant(1, 7.0));

  const Eigen::VectorXd x = solve_spd(sys);
  CHECK(x[1] == 7.0);
  // remaining 2x2: diag(4, 6) with rhs (1 - 7, 1 - 14)
  CHECK(x[0] == doctest::Approx(-6.0 / 4.0).epsilon(1e-14));
  CHECK(x[2] == doctest::Approx(-13.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("integrate") {
  const Mesh mesh = build_structured(4);
  const double four = integrate(mesh, 2.0, 1,
                                [](int, const Eigen::Vector2d&, const Eigen::Vector2d&) {
                                  return 1.0;
                                });
  CHECK(four == doctest::Approx(4.0).epsilon(1e-13));

  const double half = integrate(mesh, 1.0, 2,
                                [](int, const Eigen::Vector2d&, const Eigen::Vector2d& x) {
                                  return x.x();
                                });
  CHECK(half == doctest::Approx(0.5).epsilon(1e-13));
}
