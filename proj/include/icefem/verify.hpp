#pragma once

#include <string>
#include <vector>

namespace icefem {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0;      // measured quantity, see note for its meaning
  double threshold = 0;  // pass bound on value (>= or <=, per check)
  std::string note;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Finite-difference oracles for the constitutive jacobians and the assembled
// first variation: central differences in long double over relative steps
// h in {1e-3 .. 1e-6}, fitted convergence order and error at h = 1e-5.
VerifyReport verify_derivatives(unsigned seed = 20260813, int n_states = 100);

// Manufactured-solution L2 convergence of the velocity on the linear
// surrogate (identity law, linearized force), RT0/P1, n in {4,8,16,32}.
VerifyReport verify_convergence();

// Quadrature exactness, dof duality recomputed with finer rules, the
// divergence theorem per basis function, and Piola normal-trace continuity.
VerifyReport verify_elements();

std::string format_report(const VerifyReport& rep);

}  // namespace icefem
