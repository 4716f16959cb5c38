#include "icefem/runlog.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace icefem {
namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string runlog_csv(const RunLog& log) {
  std::ostringstream out;
  out << "schema,icefem-runlog-1\n";
  out << "step,time_days,phases,gn_iters,gn_converged,F_m,F_c,F_e,"
         "int_A,int_H,min_A,max_A,min_H,max_H,sym_defect,qp_iters_A,qp_iters_H\n";
  for (const auto& r : log.records) {
    out << r.step << ',' << num(r.time_days) << ',' << r.phases << ','
        << r.gn_iters << ',' << (r.gn_converged ? 1 : 0) << ',' << num(r.F_m)
        << ',' << num(r.F_c) << ',' << num(r.F_e) << ',' << num(r.int_A) << ','
        << num(r.int_H) << ',' << num(r.min_A) << ',' << num(r.max_A) << ','
        << num(r.min_H) << ',' << num(r.max_H) << ',' << num(r.sym_defect)
        << ',' << r.qp_iters_A << ',' << r.qp_iters_H << '\n';
  }
  return out.str();
}

void write_runlog_csv(const RunLog& log, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("runlog: cannot open '" + path + "'");
  f << runlog_csv(log);
  if (!f) throw std::runtime_error("runlog: write failed for '" + path + "'");
}

}  // namespace icefem
