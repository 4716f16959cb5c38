#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "icefem/mesh.hpp"

namespace icefem {

// One vertex-sampled field: n_vertices x 1 (scalar) or n_vertices x 2
// (vector, padded with z = 0 on output).
struct VtkField {
  std::string name;
  Eigen::MatrixXd values;
};

// Legacy ASCII unstructured grid.  Numbers are printed with 17 significant
// digits so identical inputs give identical bytes.
void export_vtk(const Mesh& mesh, const std::vector<VtkField>& fields,
                const std::string& path, double scale = 1.0);

}  // namespace icefem
