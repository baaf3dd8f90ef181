#pragma once

#include <string_view>
#include <vector>

#include "microcoil/units.hpp"

namespace microcoil {

enum class CoilShape { kRound, kSquare };

std::string_view ShapeName(CoilShape shape);

// One turn of the spiral modeled as a flat annulus (round) or square frame.
// For square coils the radii are half-side lengths.
struct TurnAnnulus {
  int index = 0;  // 1 = innermost
  Length inner_radius;
  Length outer_radius;
  Length centerline_radius;
};

// Parametric planar spiral coil. Immutable once constructed; the innermost
// radius is derived from the outer radius, turn count, width and spacing.
class CoilGeometry {
 public:
  // Throws DomainError if any parameter is out of range or the derived
  // innermost radius is not strictly positive.
  CoilGeometry(CoilShape shape, int turns, Length outer_radius,
               Length track_width, Length track_spacing,
               Length track_thickness);

  CoilShape shape() const { return shape_; }
  int turns() const { return turns_; }
  Length outer_radius() const { return outer_radius_; }
  Length track_width() const { return track_width_; }
  Length track_spacing() const { return track_spacing_; }
  Length track_thickness() const { return track_thickness_; }

  // R_max - (N-1)(w+s) - w.
  Length inner_radius() const;

  // Same coil with every length multiplied by `factor`.
  CoilGeometry Scaled(double factor) const;
  CoilGeometry WithShape(CoilShape shape) const;

  friend bool operator==(const CoilGeometry&, const CoilGeometry&) = default;

 private:
  CoilShape shape_;
  int turns_;
  Length outer_radius_;
  Length track_width_;
  Length track_spacing_;
  Length track_thickness_;
};

// Innermost (n = 1) to outermost (n = N).
std::vector<TurnAnnulus> TurnAnnuli(const CoilGeometry& coil);

enum class LengthMethod {
  // pi [2 N R_max - N w - (w+s)(N-1)(N+2)], round coils only.
  kClosedForm,
  // Sum of per-turn centerline perimeters.
  kCenterlineSum,
};

std::string_view LengthMethodName(LengthMethod method);

// Mean conductor length used for the track resistance. Throws DomainError
// for kClosedForm on a square coil or when the closed form goes negative.
Length MeanTrackLength(const CoilGeometry& coil, LengthMethod method);

// w * t.
Area CrossSection(const CoilGeometry& coil);

// 40 turns, R_max = 500 um, w = s = 5 um, t = 10 um.
CoilGeometry ReferenceCoil(CoilShape shape = CoilShape::kRound);

}  // namespace microcoil
