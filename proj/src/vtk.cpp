#include "icefem/vtk.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace icefem {
namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void export_vtk(const Mesh& mesh, const std::vector<VtkField>& fields,
                const std::string& path, double scale) {
  const int V = mesh.n_vertices();
  const int T = mesh.n_triangles();
  for (const auto& f : fields) {
    if (f.values.rows() != V)
      throw std::invalid_argument("export_vtk: field '" + f.name +
                                  "' is not vertex-sampled");
    if (f.values.cols() != 1 && f.values.cols() != 2)
      throw std::invalid_argument("export_vtk: field '" + f.name +
                                  "' must have 1 or 2 components");
  }

  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_vtk: cannot open '" + path + "'");

  out << "# vtk DataFile Version 3.0\n";
  out << "icefem state\n";
  out << "ASCII\n";
  out << "DATASET UNSTRUCTURED_GRID\n";

  out << "POINTS " << V << " double\n";
  for (int v = 0; v < V; ++v)
    out << num(scale * mesh.vertices[v].x()) << ' '
        << num(scale * mesh.vertices[v].y()) << " 0\n";

  out << "CELLS " << T << ' ' << 4 * T << '\n';
  for (int t = 0; t < T; ++t)
    out << "3 " << mesh.triangles[t][0] << ' ' << mesh.triangles[t][1] << ' '
        << mesh.triangles[t][2] << '\n';

  out << "CELL_TYPES " << T << '\n';
  for (int t = 0; t < T; ++t) out << "5\n";

  if (!fields.empty()) {
    out << "POINT_DATA " << V << '\n';
    for (const auto& f : fields) {
      if (f.values.cols() == 1) {
        out << "SCALARS " << f.name << " double 1\n";
        out << "LOOKUP_TABLE default\n";
        for (int v = 0; v < V; ++v) out << num(f.values(v, 0)) << '\n';
      } else {
        out << "VECTORS " << f.name << " double\n";
        for (int v = 0; v < V; ++v)
          out << num(f.values(v, 0)) << ' ' << num(f.values(v, 1)) << " 0\n";
      }
    }
  }

  if (!out) throw std::runtime_error("export_vtk: write failed for '" + path + "'");
}

}  // namespace icefem
