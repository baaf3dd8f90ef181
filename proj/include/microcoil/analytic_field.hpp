#pragma once

#include <optional>
#include <string>
#include <vector>

#include "microcoil/geometry.hpp"
#include "microcoil/units.hpp"

namespace microcoil {

// One field value. `axial_distance` is measured along the coil axis from the
// coil plane, `lateral_offset` in the coil plane direction x.
struct FieldSample {
  Length axial_distance;
  Length lateral_offset;
  MagneticFieldH h;
};

// Ordered samples of a single coil at a single current. Positions along the
// varying coordinate are strictly increasing.
struct FieldProfile {
  CoilGeometry coil;
  Current current;
  std::string model;
  std::vector<FieldSample> samples;
  // Samples divided by the x = 0 value; filled by lateral profiles only.
  std::optional<std::vector<double>> normalized;
};

// Center field of a uniform annular current sheet:
// I / (2 (R_out - R_in)) * ln(R_out / R_in).
MagneticFieldH CenterFieldPerTurn(const TurnAnnulus& annulus, Current current);

// Total center field. Round coils use the closed-form annular-sheet sum;
// square coils (a model extension) use the square-loop d = 0 value of each
// centerline turn, sqrt(2) I / (pi a_n).
MagneticFieldH CenterField(const CoilGeometry& coil, Current current);

// Model label for CenterField on the given shape.
std::string CenterFieldModel(CoilShape shape);

// On-axis field in the filament approximation (each turn collapsed onto its
// centerline). Negative distances are reflected.
MagneticFieldH OnAxisField(const CoilGeometry& coil, Current current,
                           Length distance);

// Per-turn contributions per ampere, exposed for the literal-vs-simplified
// regression check of the square-loop term.
double RoundLoopAxialFactor(double radius, double distance);
double SquareLoopAxialFactor(double half_side, double distance);
double SquareLoopAxialFactorLiteral(double half_side, double distance);

// Uniformly spaced on-axis samples over [start, end]. Throws ArgumentError
// unless 0 <= start < end and samples >= 2.
FieldProfile OnAxisProfile(const CoilGeometry& coil, Current current,
                           Length start, Length end, int samples);

std::string OnAxisModel(CoilShape shape);

}  // namespace microcoil
