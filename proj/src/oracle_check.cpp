#include "microcoil/oracle_check.hpp"

#include <algorithm>
#include <cmath>

#include "microcoil/analytic_field.hpp"
#include "microcoil/biot_savart.hpp"
#include "microcoil/geometry.hpp"

namespace microcoil {
namespace {

double MaxAxisError(const CoilGeometry& coil, const DiscretizationSpec& spec) {
  const SegmentSet segments = DiscretizeCoil(coil, Amperes(1.0), spec);
  double worst = 0.0;
  for (double d : OracleAxisDistances()) {
    const double expected = OnAxisField(coil, Amperes(1.0), Meters(d)).si();
    const double got = segments.FieldAt({0.0, 0.0, d}).z;
    worst = std::max(worst, std::abs(got - expected) / std::abs(expected));
  }
  return worst;
}

}  // namespace

std::vector<double> OracleAxisDistances() {
  return {0.0, 25e-6, 100e-6, 280e-6, 560e-6, 1e-3, 2e-3, 5e-3};
}

OracleCheck CheckAnnulusCenter(const OracleCheckOptions& options) {
  // One 5 um wide turn spanning [100 um, 105 um].
  const CoilGeometry turn(CoilShape::kRound, 1, Micrometers(105),
                          Micrometers(5), Micrometers(0), Micrometers(10));
  const double expected =
      CenterFieldPerTurn(TurnAnnuli(turn).front(), Amperes(1.0)).si();
  const DiscretizationSpec spec{options.annulus_segments_per_turn,
                                options.annulus_filaments};
  const double got = FieldAt(turn, Amperes(1.0), {0.0, 0.0, 0.0}, spec).z;
  const double err = std::abs(got - expected) / expected;
  return {"annulus filaments vs annular-sheet center field", err, 1e-3,
          err <= 1e-3};
}

OracleCheck CheckSquareAxis() {
  const double err =
      MaxAxisError(ReferenceCoil(CoilShape::kSquare), DiscretizationSpec{8, 1});
  return {"square coil on-axis vs closed form", err, 1e-9, err <= 1e-9};
}

OracleCheck CheckRoundAxis(const OracleCheckOptions& options) {
  const double err = MaxAxisError(
      ReferenceCoil(), DiscretizationSpec{options.round_segments_per_turn, 1});
  return {"round coil on-axis vs closed form", err, 1e-5, err <= 1e-5};
}

OracleCheck CheckRoundConvergenceOrder(const OracleCheckOptions& options) {
  const int m = options.ladder_coarse_segments;
  const double coarse =
      MaxAxisError(ReferenceCoil(), DiscretizationSpec{m, 1});
  const double fine =
      MaxAxisError(ReferenceCoil(), DiscretizationSpec{2 * m, 1});
  const double ratio = coarse / fine;
  return {"polygon refinement error ratio (expect ~4)", ratio, 0.4,
          std::abs(ratio - 4.0) <= 0.4};
}

std::vector<OracleCheck> RunOracleChecks(const OracleCheckOptions& options) {
  return {CheckAnnulusCenter(options), CheckSquareAxis(),
          CheckRoundAxis(options), CheckRoundConvergenceOrder(options)};
}

}  // namespace microcoil
