#include "icefem/dofmap.hpp"

#include <stdexcept>

namespace icefem {

DofMap build_dofmap(const Mesh& mesh, const FeSpace& space) {
  DofMap dm;
  dm.space = space;
  const int V = mesh.n_vertices();
  const int E = mesh.n_edges();
  const int T = mesh.n_triangles();
  if (space.components < 1)
    throw std::invalid_argument("build_dofmap: components must be >= 1");

  if (space.family == Family::Lagrange) {
    if (space.degree != 1 && space.degree != 2)
      throw std::invalid_argument("build_dofmap: Lagrange degree must be 1 or 2");
    dm.n_scalar = space.degree == 1 ? V : V + E;
    dm.n_local_scalar = space.degree == 1 ? 3 : 6;
  } else {
    if (space.degree != 0 && space.degree != 1)
      throw std::invalid_argument("build_dofmap: RT degree must be 0 or 1");
    dm.n_scalar = space.degree == 0 ? E : 2 * E + 2 * T;
    dm.n_local_scalar = space.degree == 0 ? 3 : 8;
  }
  dm.n_global = dm.n_scalar * space.components;
  dm.n_local = dm.n_local_scalar * space.components;

  dm.tri_gids.resize(T);
  dm.tri_signs.resize(T);
  for (int t = 0; t < T; ++t) {
    std::vector<int> gids(dm.n_local_scalar);
    std::vector<double> signs(dm.n_local_scalar, 1.0);
    const auto& tri = mesh.triangles[t];
    if (space.family == Family::Lagrange) {
      for (int k = 0; k < 3; ++k) gids[k] = tri[k];
      if (space.degree == 2)
        for (int le = 0; le < 3; ++le) gids[3 + le] = V + mesh.tri_edges[t][le];
    } else if (space.degree == 0) {
      for (int le = 0; le < 3; ++le) {
        gids[le] = mesh.tri_edges[t][le];
        signs[le] = mesh.tri_edge_sign[t][le];
      }
    } else {
      for (int le = 0; le < 3; ++le) {
        const int e = mesh.tri_edges[t][le];
        const double sn = mesh.tri_edge_sign[t][le];
        const auto [la, lb] = Mesh::local_edges()[le];
        const double st = tri[la] < tri[lb] ? 1.0 : -1.0;
        gids[2 * le + 0] = 2 * e + 0;
        gids[2 * le + 1] = 2 * e + 1;
        signs[2 * le + 0] = sn;
        signs[2 * le + 1] = sn * st;
      }
      gids[6] = 2 * E + 2 * t + 0;
      gids[7] = 2 * E + 2 * t + 1;
    }

    dm.tri_gids[t].resize(dm.n_local);
    dm.tri_signs[t].resize(dm.n_local);
    for (int c = 0; c < space.components; ++c)
      for (int i = 0; i < dm.n_local_scalar; ++i) {
        dm.tri_gids[t][c * dm.n_local_scalar + i] = c * dm.n_scalar + gids[i];
        dm.tri_signs[t][c * dm.n_local_scalar + i] = signs[i];
      }
  }

  if (space.family == Family::Lagrange) {
    for (int v = 0; v < V; ++v)
      if (mesh.boundary_vertex[v]) dm.boundary_scalar.push_back(v);
    if (space.degree == 2)
      for (int e = 0; e < E; ++e)
        if (mesh.boundary_edge[e]) dm.boundary_scalar.push_back(V + e);
  } else {
    for (int e = 0; e < E; ++e)
      if (mesh.boundary_edge[e]) {
        if (space.degree == 0) {
          dm.boundary_scalar.push_back(e);
        } else {
          dm.boundary_scalar.push_back(2 * e + 0);
          dm.boundary_scalar.push_back(2 * e + 1);
        }
      }
  }
  return dm;
}

}  // namespace icefem
