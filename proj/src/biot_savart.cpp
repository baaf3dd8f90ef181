#include "microcoil/biot_savart.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "microcoil/errors.hpp"

namespace microcoil {

double Norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

void DiscretizationSpec::Validate() const {
  if (segments_per_turn < 8) {
    throw ArgumentError("segments_per_turn must be at least 8");
  }
  if (filaments_per_track_width < 1) {
    throw ArgumentError("filaments_per_track_width must be at least 1");
  }
}

Vec3 SegmentField(Vec3 a, Vec3 b, Current current, Vec3 p) {
  if (a == b) throw ArgumentError("segment endpoints coincide");
  const double i = current.si();
  const simd::SegmentSpan span{&a.x, &a.y, &a.z, &b.x, &b.y, &b.z, &i, 1};
  const simd::FieldSum sum = simd::SumSegmentsScalar(span, p.x, p.y, p.z);
  if (sum.singular) {
    throw SingularityError("evaluation point lies on a current filament");
  }
  return {sum.hx, sum.hy, sum.hz};
}

namespace {

FilamentPath MakeLoop(CoilShape shape, double radius, Current current,
                      int segments_per_turn) {
  FilamentPath path{{}, current, true};
  if (shape == CoilShape::kSquare) {
    const double r = radius;
    path.points = {{r, -r, 0.0}, {r, r, 0.0}, {-r, r, 0.0}, {-r, -r, 0.0}};
    return path;
  }
  path.points.reserve(segments_per_turn);
  for (int j = 0; j < segments_per_turn; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / segments_per_turn;
    path.points.push_back(
        {radius * std::cos(phi), radius * std::sin(phi), 0.0});
  }
  return path;
}

// Calls `visit` with every filament loop, innermost turn first.
template <class Visitor>
void ForEachFilament(const CoilGeometry& coil, Current current,
                     const DiscretizationSpec& spec, Visitor&& visit) {
  spec.Validate();
  const int per_width = spec.filaments_per_track_width;
  const Current filament_current = current / per_width;
  const double w = coil.track_width().si();
  for (const TurnAnnulus& turn : TurnAnnuli(coil)) {
    for (int k = 0; k < per_width; ++k) {
      const double r = turn.inner_radius.si() + (k + 0.5) * w / per_width;
      visit(MakeLoop(coil.shape(), r, filament_current,
                     spec.segments_per_turn));
    }
  }
}

// Above this many segments FieldAt streams the coil in chunks instead of
// materializing every segment.
constexpr std::size_t kChunkSegments = std::size_t{1} << 20;

}  // namespace

std::vector<FilamentPath> SpiralToFilaments(const CoilGeometry& coil,
                                            Current current,
                                            const DiscretizationSpec& spec) {
  std::vector<FilamentPath> paths;
  paths.reserve(static_cast<std::size_t>(coil.turns()) *
                spec.filaments_per_track_width);
  ForEachFilament(coil, current, spec,
                  [&](FilamentPath path) { paths.push_back(std::move(path)); });
  return paths;
}

SegmentSet::SegmentSet(const std::vector<FilamentPath>& paths) {
  for (const FilamentPath& path : paths) Append(path);
}

void SegmentSet::AddSegment(Vec3 a, Vec3 b, double current) {
  if (a == b) throw ArgumentError("filament has repeated consecutive points");
  ax_.push_back(a.x);
  ay_.push_back(a.y);
  az_.push_back(a.z);
  bx_.push_back(b.x);
  by_.push_back(b.y);
  bz_.push_back(b.z);
  current_.push_back(current);
}

void SegmentSet::Append(const FilamentPath& path) {
  const auto& pts = path.points;
  if (pts.size() < 2) throw ArgumentError("filament needs at least 2 points");
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    AddSegment(pts[i], pts[i + 1], path.current.si());
  }
  if (path.closed) AddSegment(pts.back(), pts.front(), path.current.si());
}

void SegmentSet::Append(const SegmentSet& other) {
  auto cat = [](std::vector<double>& dst, const std::vector<double>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  };
  cat(ax_, other.ax_);
  cat(ay_, other.ay_);
  cat(az_, other.az_);
  cat(bx_, other.bx_);
  cat(by_, other.by_);
  cat(bz_, other.bz_);
  cat(current_, other.current_);
}

simd::SegmentSpan SegmentSet::span() const {
  return {ax_.data(), ay_.data(), az_.data(),      bx_.data(),
          by_.data(), bz_.data(), current_.data(), ax_.size()};
}

Vec3 SegmentSet::FieldAt(Vec3 p, simd::Isa isa) const {
  const simd::FieldSum sum = simd::SumSegments(span(), p.x, p.y, p.z, isa);
  if (sum.singular) {
    throw SingularityError("evaluation point lies on a current filament");
  }
  return {sum.hx, sum.hy, sum.hz};
}

SegmentSet DiscretizeCoil(const CoilGeometry& coil, Current current,
                          const DiscretizationSpec& spec) {
  SegmentSet set;
  ForEachFilament(coil, current, spec,
                  [&](const FilamentPath& path) { set.Append(path); });
  return set;
}

Vec3 FieldAt(const CoilGeometry& coil, Current current, Vec3 point,
             const DiscretizationSpec& spec) {
  Vec3 total;
  SegmentSet chunk;
  auto flush = [&] {
    total = total + chunk.FieldAt(point);
    chunk = SegmentSet();
  };
  ForEachFilament(coil, current, spec, [&](const FilamentPath& path) {
    chunk.Append(path);
    if (chunk.size() >= kChunkSegments) flush();
  });
  if (chunk.size() > 0) flush();
  return total;
}

namespace {

void CheckSamples(int samples) {
  if (samples < 2) throw ArgumentError("profile needs at least 2 samples");
}

double UniformPoint(double start, double end, int i, int samples) {
  if (i + 1 == samples) return end;
  return start + i * (end - start) / (samples - 1);
}

}  // namespace

FieldProfile LateralProfile(const CoilGeometry& coil, Current current,
                            Length distance, Length x_start, Length x_end,
                            int samples, const DiscretizationSpec& spec) {
  if (!(distance.si() > 0.0)) {
    throw ArgumentError("lateral profile needs a positive axial distance");
  }
  if (!(x_end.si() > x_start.si())) {
    throw ArgumentError("lateral profile needs x_start < x_end");
  }
  CheckSamples(samples);

  const SegmentSet segments = DiscretizeCoil(coil, current, spec);
  const double z = distance.si();
  FieldProfile profile{coil, current, kOracleModel, {}, std::vector<double>{}};
  profile.samples.reserve(samples);
  const double center = segments.FieldAt({0.0, 0.0, z}).z;
  for (int i = 0; i < samples; ++i) {
    const double x = UniformPoint(x_start.si(), x_end.si(), i, samples);
    const double hz = x == 0.0 ? center : segments.FieldAt({x, 0.0, z}).z;
    profile.samples.push_back({distance, Meters(x), AmperesPerMeter(hz)});
    profile.normalized->push_back(hz / center);
  }
  return profile;
}

FieldProfile OracleAxisProfile(const CoilGeometry& coil, Current current,
                               Length start, Length end, int samples,
                               const DiscretizationSpec& spec) {
  if (!(start.si() >= 0.0) || !(end.si() > start.si())) {
    throw ArgumentError("axis profile needs 0 <= start < end");
  }
  CheckSamples(samples);
  const SegmentSet segments = DiscretizeCoil(coil, current, spec);
  FieldProfile profile{coil, current, kOracleModel, {}, {}};
  profile.samples.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double d = UniformPoint(start.si(), end.si(), i, samples);
    profile.samples.push_back(
        {Meters(d), Meters(0.0),
         AmperesPerMeter(segments.FieldAt({0.0, 0.0, d}).z)});
  }
  return profile;
}

MagneticFieldH SensorAveragedField(const CoilGeometry& coil, Current current,
                                   Length distance, const SensorWindow& window,
                                   const DiscretizationSpec& spec) {
  if (!(distance.si() >= 0.0)) {
    throw ArgumentError("sensor distance must be non-negative");
  }
  if (!(window.length.si() > 0.0)) {
    throw ArgumentError("sensor window length must be positive");
  }
  if (window.samples < 64) {
    throw ArgumentError("sensor averaging needs at least 64 samples");
  }
  const SegmentSet segments = DiscretizeCoil(coil, current, spec);
  const double length = window.length.si();
  const double start =
      window.centered ? distance.si() - 0.5 * length : distance.si();
  const double step = length / window.samples;
  double sum = 0.0;
  for (int i = 0; i < window.samples; ++i) {
    sum += segments.FieldAt({0.0, 0.0, start + (i + 0.5) * step}).z;
  }
  return AmperesPerMeter(sum / window.samples);
}

}  // namespace microcoil
