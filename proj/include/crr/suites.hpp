#pragma once

#include <string>
#include <vector>

namespace crr {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

SuiteResult suite_interlacing_containment();  // zeros to n = 200 on the parameter grid
SuiteResult suite_oracle_equivalence();       // determinant + rational cross-checks
SuiteResult suite_identities();               // wronskian, chain, verblunsky, ode
SuiteResult suite_measure();                  // mass, orthogonality, associated integral
SuiteResult suite_asymptotics();              // log-log slopes + closed-form n = 2 ratio
SuiteResult suite_electrostatics();           // stieltjes residuals + PSD certificates
SuiteResult suite_analysis_grid();            // convexity/spacing verdicts on the grid

std::vector<SuiteResult> run_all_suites();

}  // namespace crr
