#include <set>

#include "doctest.h"
#include "icefem/dofmap.hpp"

using namespace icefem;

TEST_CASE("dof counts") {
  const Mesh m1 = build_structured(1);
  const Mesh m2 = build_structured(2);

  CHECK(build_dofmap(m1, {Family::Lagrange, 1, 1}).n_global == 4);
  CHECK(build_dofmap(m1, {Family::RavThomas, 0, 1}).n_global == 5);
  CHECK(build_dofmap(m1, {Family::Lagrange, 1, 2}).n_global == 8);
  CHECK(build_dofmap(m1, {Family::RavThomas, 0, 2}).n_global == 10);

  // P2 scalar: vertices + edges; RT1 scalar: 2 per edge + 2 per triangle
  const DofMap p2 = build_dofmap(m2, {Family::Lagrange, 2, 2});
  CHECK(p2.n_scalar == 9 + 16);
  CHECK(p2.n_global == 50);
  CHECK(p2.n_local_scalar == 6);
  CHECK(p2.n_local == 12);

  const DofMap rt1 = build_dofmap(m2, {Family::RavThomas, 1, 2});
  CHECK(rt1.n_scalar == 2 * 16 + 2 * 8);
  CHECK(rt1.n_global == 96);
  CHECK(rt1.n_local_scalar == 8);
  CHECK(rt1.n_local == 16);
}

TEST_CASE("component block layout") {
  const Mesh m = build_structured(2);
  for (const FeSpace sp : {FeSpace{Family::Lagrange, 2, 2},
                           FeSpace{Family::RavThomas, 1, 2}}) {
    const DofMap dm = build_dofmap(m, sp);
    for (int t = 0; t < m.n_triangles(); ++t) {
      const auto& g = dm.tri_gids[t];
      REQUIRE(static_cast<int>(g.size()) == dm.n_local);
      for (int i = 0; i < dm.n_local_scalar; ++i) {
        CHECK(g[i] < dm.n_scalar);
        // component 1 is the component-0 id shifted by one block
        CHECK(g[dm.n_local_scalar + i] == g[i] + dm.n_scalar);
        CHECK(dm.tri_signs[t][i] == dm.tri_signs[t][dm.n_local_scalar + i]);
      }
    }
  }
}

TEST_CASE("dof coverage and sharing") {
  const Mesh m = build_structured(2);
  const DofMap dm = build_dofmap(m, {Family::RavThomas, 0, 1});

  // every global dof appears, shared edges appear exactly twice
  std::vector<int> uses(dm.n_scalar, 0);
  for (int t = 0; t < m.n_triangles(); ++t)
    for (int i = 0; i < dm.n_local_scalar; ++i) ++uses[dm.tri_gids[t][i]];
  for (int e = 0; e < m.n_edges(); ++e)
    CHECK(uses[e] == (m.boundary_edge[e] ? 1 : 2));
}

TEST_CASE("rt orientation signs match the mesh") {
  const Mesh m = build_structured(2);
  const DofMap rt0 = build_dofmap(m, {Family::RavThomas, 0, 1});
  for (int t = 0; t < m.n_triangles(); ++t)
    for (int le = 0; le < 3; ++le)
      CHECK(rt0.tri_signs[t][le] == m.tri_edge_sign[t][le]);

  const DofMap p1 = build_dofmap(m, {Family::Lagrange, 1, 2});
  for (int t = 0; t < m.n_triangles(); ++t)
    for (double s : p1.tri_signs[t]) CHECK(s == 1.0);
}

TEST_CASE("boundary dofs") {
  const Mesh m = build_structured(2);

  const DofMap p1 = build_dofmap(m, {Family::Lagrange, 1, 2});
  CHECK(p1.boundary_scalar.size() == 8);  // rim vertices of the 3x3 grid
  const auto bd = p1.boundary_dofs();
  CHECK(bd.size() == 16);
  const std::set<int> uniq(bd.begin(), bd.end());
  CHECK(uniq.size() == bd.size());
  for (int d : bd) {
    const int s = d % p1.n_scalar;
    CHECK(m.boundary_vertex[s]);
  }

  const DofMap p2 = build_dofmap(m, {Family::Lagrange, 2, 1});
  CHECK(p2.boundary_scalar.size() == 8 + 8);  // rim vertices + rim edge midpoints

  const DofMap rt0 = build_dofmap(m, {Family::RavThomas, 0, 1});
  CHECK(static_cast<int>(rt0.boundary_scalar.size()) == m.n_boundary_edges());
}
