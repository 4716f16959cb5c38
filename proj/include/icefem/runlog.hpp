#pragma once

#include <string>
#include <vector>

namespace icefem {

// One completed time step.  F_e is the boundary misfit term, identically 0
// here because the velocity space enforces u = 0 on the boundary strongly;
// the column stays so the schema does not depend on that choice.
struct StepRecord {
  int step = 0;
  double time_days = 0;   // at the end of the step
  std::string phases;     // completion markers, e.g. "advect;momentum"
  int gn_iters = 0;
  bool gn_converged = false;
  double F_m = 0;
  double F_c = 0;
  double F_e = 0;
  double int_A = 0;
  double int_H = 0;
  double min_A = 0, max_A = 0;
  double min_H = 0, max_H = 0;
  double sym_defect = 0;
  int qp_iters_A = 0, qp_iters_H = 0;
  double wall_seconds = 0;  // diagnostic only, never serialized
};

struct RunLog {
  std::vector<StepRecord> records;
};

// CSV with a schema id line, a column header, then one line per record.
// wall_seconds is omitted so identical runs give identical bytes.
std::string runlog_csv(const RunLog& log);
void write_runlog_csv(const RunLog& log, const std::string& path);

}  // namespace icefem
