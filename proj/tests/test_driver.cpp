#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "icefem/driver.hpp"
#include "icefem/fields.hpp"
#include "icefem/vtk.hpp"

using namespace icefem;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& leaf) {
  const fs::path p = fs::temp_directory_path() / "icefem_driver_tests" / leaf;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) lines.push_back(line);
  return lines;
}

std::string read_all(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

BenchmarkConfig tiny_config(const fs::path& out) {
  BenchmarkConfig cfg;
  cfg.n = 4;
  cfg.dt_seconds = 3600.0;
  cfg.T_days = 2.0 / 24.0;
  cfg.out_dir = out.string();
  return cfg;
}

}  // namespace

TEST_CASE("driver: zero-length run writes the initial snapshot and an empty log") {
  BenchmarkConfig cfg;
  cfg.n = 2;
  cfg.T_days = 0.0;
  cfg.out_dir = fresh_dir("t0").string();

  const RunResult res = run(cfg);
  CHECK(res.ok);
  CHECK(res.failed_step == -1);
  CHECK(res.error.empty());
  CHECK(res.log.records.empty());
  CHECK(res.gn_reports.empty());

  REQUIRE(res.vtk_files.size() == 1);
  CHECK(fs::path(res.vtk_files[0]).filename().string() == "state_000000.0h.vtk");
  CHECK(fs::exists(res.vtk_files[0]));

  REQUIRE(!res.csv_path.empty());
  const auto lines = read_lines(res.csv_path);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "schema,icefem-runlog-1");
  CHECK(lines[1].substr(0, 15) == "step,time_days,");

  CHECK(res.tracers.A.size() == 9);
  CHECK(res.momentum.u.size() == 18);
}

TEST_CASE("driver: hourly steps log both phases and snapshot the final state") {
  const RunResult res = run(tiny_config(fresh_dir("t2")));
  REQUIRE(res.ok);
  REQUIRE(res.log.records.size() == 2);
  REQUIRE(res.gn_reports.size() == 2);

  for (const StepRecord& r : res.log.records) {
    CHECK(r.phases == "advect;momentum");
    CHECK(r.gn_converged);
    CHECK(r.gn_iters >= 1);
    CHECK(r.min_A >= 0.0);
    CHECK(r.max_A <= 1.0);
    CHECK(r.min_H >= 0.0);
    CHECK(r.F_m >= 0.0);
    CHECK(r.F_c >= 0.0);
    CHECK(r.F_e == 0.0);
    CHECK(r.sym_defect >= 0.0);
  }
  // the first advection sees u = 0, a fixed point of the transport step
  CHECK(res.log.records[0].int_A == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.log.records[0].min_A == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.log.records[1].step == 2);
  CHECK(res.log.records[1].time_days == doctest::Approx(2.0 / 24.0));
  for (const GnReport& rep : res.gn_reports) CHECK(rep.converged);

  REQUIRE(res.vtk_files.size() == 2);  // t = 0 plus the final step, cadence is 6 h
  CHECK(fs::path(res.vtk_files[0]).filename().string() == "state_000000.0h.vtk");
  CHECK(fs::path(res.vtk_files[1]).filename().string() == "state_000002.0h.vtk");

  const auto lines = read_lines(res.csv_path);
  REQUIRE(lines.size() == 4);
  CHECK(lines[2].substr(0, 2) == "1,");
  CHECK(lines[3].substr(0, 2) == "2,");

  CHECK(res.momentum.u.allFinite());
  CHECK(res.momentum.sigma.allFinite());
  CHECK(res.tracers.A.minCoeff() >= 0.0);
  CHECK(res.tracers.A.maxCoeff() <= 1.0);
  CHECK(res.tracers.H.minCoeff() >= 0.0);
}

TEST_CASE("driver: disabled writers leave the output directory untouched") {
  const fs::path parent = fs::temp_directory_path() / "icefem_driver_tests";
  fs::create_directories(parent);
  const fs::path out = parent / "t3";
  fs::remove_all(out);

  BenchmarkConfig cfg;
  cfg.n = 2;
  cfg.T_days = 0.0;
  cfg.out_dir = out.string();
  cfg.write_vtk = false;
  cfg.write_csv = false;

  const RunResult res = run(cfg);
  CHECK(res.ok);
  CHECK(res.vtk_files.empty());
  CHECK(res.csv_path.empty());
  CHECK(!fs::exists(out));
}

TEST_CASE("driver: repeated runs are byte-identical") {
  const RunResult a = run(tiny_config(fresh_dir("d1")));
  const RunResult b = run(tiny_config(fresh_dir("d2")));
  REQUIRE(a.ok);
  REQUIRE(b.ok);
  CHECK(read_all(a.csv_path) == read_all(b.csv_path));
  REQUIRE(a.vtk_files.size() == b.vtk_files.size());
  for (size_t i = 0; i < a.vtk_files.size(); ++i)
    CHECK(read_all(a.vtk_files[i]) == read_all(b.vtk_files[i]));
}

TEST_CASE("driver: vtk export layout and value round trip") {
  const Mesh mesh = build_structured(1);
  Eigen::MatrixXd h(4, 1);
  h << 0.25, -1.5, 1.0 / 3.0, 4e-17;
  Eigen::MatrixXd u(4, 2);
  u << 1.0, 2.0, -0.125, 0.7, 1e300, -1e-300, 0.0, -0.0;

  const std::string path = (fresh_dir("vtk") / "mini.vtk").string();
  export_vtk(mesh, {{"h", h}, {"u", u}}, path, 2.0);

  const auto lines = read_lines(path);
  REQUIRE(lines.size() == 4 + 1 + 4 + 1 + 2 + 1 + 2 + 1 + 2 + 4 + 1 + 4);
  CHECK(lines[0] == "# vtk DataFile Version 3.0");
  CHECK(lines[1] == "icefem state");
  CHECK(lines[2] == "ASCII");
  CHECK(lines[3] == "DATASET UNSTRUCTURED_GRID");
  CHECK(lines[4] == "POINTS 4 double");
  for (int v = 0; v < 4; ++v) {
    std::istringstream ss(lines[5 + v]);
    double x, y, z;
    REQUIRE((ss >> x >> y >> z));
    CHECK(x == 2.0 * mesh.vertices[v].x());
    CHECK(y == 2.0 * mesh.vertices[v].y());
    CHECK(z == 0.0);
  }
  CHECK(lines[9] == "CELLS 2 8");
  for (int t = 0; t < 2; ++t) {
    std::istringstream ss(lines[10 + t]);
    int c, a, b, d;
    REQUIRE((ss >> c >> a >> b >> d));
    CHECK(c == 3);
    CHECK(a == mesh.triangles[t][0]);
    CHECK(b == mesh.triangles[t][1]);
    CHECK(d == mesh.triangles[t][2]);
  }
  CHECK(lines[12] == "CELL_TYPES 2");
  CHECK(lines[13] == "5");
  CHECK(lines[14] == "5");
  CHECK(lines[15] == "POINT_DATA 4");
  CHECK(lines[16] == "SCALARS h double 1");
  CHECK(lines[17] == "LOOKUP_TABLE default");
  for (int v = 0; v < 4; ++v) CHECK(std::stod(lines[18 + v]) == h(v, 0));
  CHECK(lines[22] == "VECTORS u double");
  for (int v = 0; v < 4; ++v) {
    std::istringstream ss(lines[23 + v]);
    double x, y, z;
    REQUIRE((ss >> x >> y >> z));
    CHECK(x == u(v, 0));
    CHECK(y == u(v, 1));
    CHECK(z == 0.0);
  }

  // identical input, identical bytes
  const std::string path2 = (fs::path(path).parent_path() / "mini2.vtk").string();
  export_vtk(mesh, {{"h", h}, {"u", u}}, path2, 2.0);
  CHECK(read_all(path) == read_all(path2));

  CHECK_THROWS(export_vtk(mesh, {{"bad", Eigen::MatrixXd::Zero(3, 1)}}, path2));
  CHECK_THROWS(export_vtk(mesh, {{"bad", Eigen::MatrixXd::Zero(4, 3)}}, path2));
}

TEST_CASE("driver: coefficient sampler reproduces a linear field and its divergence") {
  const Mesh mesh = build_structured(2);
  const DofMap dmu = build_dofmap(mesh, {Family::Lagrange, 1, 2});

  for (double scale : {1.0, 10.0}) {
    CAPTURE(scale);
    auto f = [](const Eigen::Vector2d& x) {
      return Eigen::Vector2d(2.0 * x[0] - x[1] + 0.5, x[0] + 3.0 * x[1]);
    };
    const Eigen::VectorXd coeffs = interpolate_lagrange(
        mesh, dmu, scale, [&](const Eigen::Vector2d& x) -> Eigen::VectorXd {
          return f(x);
        });
    const VelocitySampler vel = coefficient_sampler(mesh, dmu, coeffs, scale);

    for (int tri : {0, 3, 7}) {
      const GeometryMap geom = geometry_map(mesh, tri, scale);
      const Eigen::Vector2d ref(1.0 / 3.0, 1.0 / 3.0);
      Eigen::Vector2d uv;
      double div = 0;
      vel(tri, ref, geom.to_physical(ref), uv, div);
      const Eigen::Vector2d want = f(geom.to_physical(ref));
      CHECK((uv - want).norm() <= 1e-12 * want.norm());
      CHECK(div == doctest::Approx(5.0).epsilon(1e-12));
    }
  }
}
