#include "microcoil/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "microcoil/errors.hpp"

namespace microcoil {
namespace {

void Require(bool condition, const std::string& message) {
  if (!condition) throw DomainError("invalid coil geometry: " + message);
}

}  // namespace

std::string_view ShapeName(CoilShape shape) {
  return shape == CoilShape::kRound ? "round" : "square";
}

std::string_view LengthMethodName(LengthMethod method) {
  return method == LengthMethod::kClosedForm ? "closed_form"
                                               : "centerline_sum";
}

CoilGeometry::CoilGeometry(CoilShape shape, int turns, Length outer_radius,
                           Length track_width, Length track_spacing,
                           Length track_thickness)
    : shape_(shape),
      turns_(turns),
      outer_radius_(outer_radius),
      track_width_(track_width),
      track_spacing_(track_spacing),
      track_thickness_(track_thickness) {
  Require(turns_ >= 1, "turn count must be at least 1");
  for (Length l : {outer_radius_, track_width_, track_spacing_,
                   track_thickness_}) {
    Require(std::isfinite(l.si()), "lengths must be finite");
  }
  Require(outer_radius_.si() > 0.0, "outer radius must be positive");
  Require(track_width_.si() > 0.0, "track width must be positive");
  Require(track_spacing_.si() >= 0.0, "track spacing must be non-negative");
  Require(track_thickness_.si() > 0.0, "track thickness must be positive");
  // Rounding residue of an exactly-zero R_min counts as zero.
  Require(inner_radius().si() > 1e-12 * outer_radius_.si(),
          "innermost radius R_max - (N-1)(w+s) - w must be positive (got " +
              std::to_string(InMicrometers(inner_radius())) + " um)");
}

Length CoilGeometry::inner_radius() const {
  return outer_radius_ - (turns_ - 1) * (track_width_ + track_spacing_) -
         track_width_;
}

CoilGeometry CoilGeometry::Scaled(double factor) const {
  return CoilGeometry(shape_, turns_, outer_radius_ * factor,
                      track_width_ * factor, track_spacing_ * factor,
                      track_thickness_ * factor);
}

CoilGeometry CoilGeometry::WithShape(CoilShape shape) const {
  return CoilGeometry(shape, turns_, outer_radius_, track_width_,
                      track_spacing_, track_thickness_);
}

std::vector<TurnAnnulus> TurnAnnuli(const CoilGeometry& coil) {
  const int n_turns = coil.turns();
  const double r_max = coil.outer_radius().si();
  const double w = coil.track_width().si();
  const double pitch = w + coil.track_spacing().si();

  std::vector<TurnAnnulus> annuli;
  annuli.reserve(n_turns);
  for (int n = 1; n <= n_turns; ++n) {
    const double r_min = r_max - (n_turns - n) * pitch - w;
    annuli.push_back({n, Meters(r_min), Meters(r_min + w),
                      Meters(r_min + 0.5 * w)});
  }
  return annuli;
}

Length MeanTrackLength(const CoilGeometry& coil, LengthMethod method) {
  const double n = coil.turns();
  const double w = coil.track_width().si();
  const double pitch = w + coil.track_spacing().si();

  if (method == LengthMethod::kClosedForm) {
    if (coil.shape() != CoilShape::kRound) {
      throw DomainError(
          "the closed-form mean length applies to round coils only; use "
          "centerline_sum for square coils");
    }
    const double length =
        std::numbers::pi * (2.0 * n * coil.outer_radius().si() - n * w -
                            pitch * (n - 1.0) * (n + 2.0));
    if (!(length > 0.0)) {
      throw DomainError("closed-form mean length is not positive for this "
                        "geometry");
    }
    return Meters(length);
  }

  // Perimeter per unit centerline radius: 2 pi for circles, 8 for squares
  // (four sides of length 2a).
  const double perimeter_factor =
      coil.shape() == CoilShape::kRound ? 2.0 * std::numbers::pi : 8.0;
  double radius_sum = 0.0;
  for (const TurnAnnulus& turn : TurnAnnuli(coil)) {
    radius_sum += turn.centerline_radius.si();
  }
  return Meters(perimeter_factor * radius_sum);
}

Area CrossSection(const CoilGeometry& coil) {
  return coil.track_width() * coil.track_thickness();
}

CoilGeometry ReferenceCoil(CoilShape shape) {
  return CoilGeometry(shape, 40, Micrometers(500), Micrometers(5),
                      Micrometers(5), Micrometers(10));
}

}  // namespace microcoil
