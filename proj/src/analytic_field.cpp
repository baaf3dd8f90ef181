#include "microcoil/analytic_field.hpp"

#include <cmath>
#include <numbers>

#include "microcoil/errors.hpp"

namespace microcoil {

MagneticFieldH CenterFieldPerTurn(const TurnAnnulus& annulus, Current current) {
  const double r_in = annulus.inner_radius.si();
  const double r_out = annulus.outer_radius.si();
  return AmperesPerMeter(current.si() / (2.0 * (r_out - r_in)) *
                         std::log(r_out / r_in));
}

MagneticFieldH CenterField(const CoilGeometry& coil, Current current) {
  const int n_turns = coil.turns();
  const double r_max = coil.outer_radius().si();
  const double w = coil.track_width().si();
  const double pitch = w + coil.track_spacing().si();

  if (coil.shape() == CoilShape::kSquare) {
    return OnAxisField(coil, current, Meters(0.0));
  }

  double sum = 0.0;
  for (int n = 1; n <= n_turns; ++n) {
    sum += std::log1p(w / (r_max - (n_turns - n) * pitch - w));
  }
  return AmperesPerMeter(current.si() / (2.0 * w) * sum);
}

std::string CenterFieldModel(CoilShape shape) {
  return shape == CoilShape::kRound
             ? "annular_sheet"
             : "square_filament_d0 (model extension)";
}

double RoundLoopAxialFactor(double radius, double distance) {
  const double r2 = radius * radius;
  const double q = distance * distance + r2;
  return 0.5 * r2 / (q * std::sqrt(q));
}

double SquareLoopAxialFactor(double half_side, double distance) {
  const double a2 = half_side * half_side;
  const double d2 = distance * distance;
  return 2.0 / std::numbers::pi * a2 / ((d2 + a2) * std::sqrt(d2 + 2.0 * a2));
}

double SquareLoopAxialFactorLiteral(double half_side, double distance) {
  const double q = distance * distance + half_side * half_side;
  return 2.0 / std::numbers::pi * half_side / q *
         std::sin(std::atan(half_side / std::sqrt(q)));
}

MagneticFieldH OnAxisField(const CoilGeometry& coil, Current current,
                           Length distance) {
  const double d = std::abs(distance.si());
  const bool round = coil.shape() == CoilShape::kRound;
  double sum = 0.0;
  for (const TurnAnnulus& turn : TurnAnnuli(coil)) {
    const double r = turn.centerline_radius.si();
    sum += round ? RoundLoopAxialFactor(r, d) : SquareLoopAxialFactor(r, d);
  }
  return AmperesPerMeter(current.si() * sum);
}

std::string OnAxisModel(CoilShape shape) {
  return shape == CoilShape::kRound ? "round_filament_axis"
                                    : "square_filament_axis";
}

FieldProfile OnAxisProfile(const CoilGeometry& coil, Current current,
                           Length start, Length end, int samples) {
  if (!(start.si() >= 0.0) || !(end.si() > start.si())) {
    throw ArgumentError("on-axis profile needs 0 <= start < end");
  }
  if (samples < 2) {
    throw ArgumentError("on-axis profile needs at least 2 samples");
  }
  FieldProfile profile{coil, current, OnAxisModel(coil.shape()), {}, {}};
  profile.samples.reserve(samples);
  const double step = (end.si() - start.si()) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    // Pin the last sample to `end` exactly.
    const Length d =
        i + 1 == samples ? end : Meters(start.si() + i * step);
    profile.samples.push_back({d, Meters(0.0), OnAxisField(coil, current, d)});
  }
  return profile;
}

}  // namespace microcoil
