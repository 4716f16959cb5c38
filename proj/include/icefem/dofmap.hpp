#pragma once

#include <vector>

#include "icefem/mesh.hpp"

namespace icefem {

enum class Family { Lagrange, RavThomas };

struct FeSpace {
  Family family = Family::Lagrange;
  int degree = 1;     // Lagrange 1|2, RavThomas 0|1
  int components = 1; // vector multiplicity; RT components are tensor rows
};

// Block layout: component c occupies global indices [c*n_scalar, (c+1)*n_scalar).
// Per-triangle local ordering is component-major over the reference-element
// dof order. tri_signs fold the RT edge-orientation (+flux and odd-moment
// direction) relative to the global lower-to-higher vertex convention; all
// Lagrange signs are +1.
struct DofMap {
  FeSpace space;
  int n_scalar = 0;
  int n_global = 0;
  int n_local_scalar = 0;
  int n_local = 0;
  std::vector<std::vector<int>> tri_gids;
  std::vector<std::vector<double>> tri_signs;
  std::vector<int> boundary_scalar;  // per-component dof ids on the boundary

  // All-component boundary dof ids within this map's block.
  std::vector<int> boundary_dofs() const {
    std::vector<int> out;
    out.reserve(boundary_scalar.size() * space.components);
    for (int c = 0; c < space.components; ++c)
      for (int s : boundary_scalar) out.push_back(c * n_scalar + s);
    return out;
  }
};

DofMap build_dofmap(const Mesh& mesh, const FeSpace& space);

}  // namespace icefem
