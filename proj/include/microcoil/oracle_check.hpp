#pragma once

// Analytic-vs-Biot-Savart equivalence runs, shared by the CLI and tests.

#include <string>
#include <vector>

namespace microcoil {

struct OracleCheck {
  std::string name;
  double measured = 0.0;   // max relative error, or error ratio for order
  double tolerance = 0.0;  // upper bound (or half-width around 4 for order)
  bool pass = false;
};

struct OracleCheckOptions {
  int annulus_filaments = 100000;
  int annulus_segments_per_turn = 256;
  int round_segments_per_turn = 4096;
  int ladder_coarse_segments = 256;  // doubled once for the order check
};

// Distances used for the on-axis comparisons, in meters.
std::vector<double> OracleAxisDistances();

OracleCheck CheckAnnulusCenter(const OracleCheckOptions& options);
OracleCheck CheckSquareAxis();
OracleCheck CheckRoundAxis(const OracleCheckOptions& options);
// Ratio of max on-axis errors at M and 2M segments; passes within 4 +- 0.4.
OracleCheck CheckRoundConvergenceOrder(const OracleCheckOptions& options);

std::vector<OracleCheck> RunOracleChecks(const OracleCheckOptions& options);

}  // namespace microcoil
