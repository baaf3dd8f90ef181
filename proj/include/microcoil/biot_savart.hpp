#pragma once

// Numerical field oracle: coils are discretized into straight current
// filaments and summed with the exact finite-segment Biot-Savart law. This
// path shares no formulas with analytic_field.hpp.

#include <vector>

#include "microcoil/analytic_field.hpp"
#include "microcoil/geometry.hpp"
#include "microcoil/simd/segment_kernels.hpp"
#include "microcoil/units.hpp"

namespace microcoil {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double k, Vec3 a) { return {k * a.x, k * a.y, k * a.z}; }
  friend bool operator==(Vec3, Vec3) = default;
};

double Norm(Vec3 v);

// Polyline carrying a current. For closed paths the last point connects back
// to the first; the first point is not repeated.
struct FilamentPath {
  std::vector<Vec3> points;
  Current current;
  bool closed = true;
};

struct DiscretizationSpec {
  int segments_per_turn = 256;        // round coils only, >= 8
  int filaments_per_track_width = 1;  // >= 1

  // Throws ArgumentError.
  void Validate() const;
};

// Field of the straight filament a -> b at p, in A/m. Throws ArgumentError if
// a == b and SingularityError if p lies within 1e-12 m of the segment.
Vec3 SegmentField(Vec3 a, Vec3 b, Current current, Vec3 p);

// Each turn becomes `filaments_per_track_width` concentric closed loops at
// the midpoints of equal sub-strips of [R_in, R_out], each carrying
// current / filaments_per_track_width. Round loops are inscribed regular
// polygons, square loops exact 4-segment squares. Loops lie in z = 0 and
// circulate counter-clockwise seen from +z.
std::vector<FilamentPath> SpiralToFilaments(const CoilGeometry& coil,
                                            Current current,
                                            const DiscretizationSpec& spec);

// Flattened struct-of-arrays segment storage fed to the SIMD kernels.
class SegmentSet {
 public:
  SegmentSet() = default;
  explicit SegmentSet(const std::vector<FilamentPath>& paths);

  void Append(const FilamentPath& path);
  void Append(const SegmentSet& other);

  std::size_t size() const { return ax_.size(); }
  simd::SegmentSpan span() const;

  // Throws SingularityError when p touches a segment.
  Vec3 FieldAt(Vec3 p, simd::Isa isa = simd::ActiveIsa()) const;

 private:
  void AddSegment(Vec3 a, Vec3 b, double current);

  std::vector<double> ax_, ay_, az_, bx_, by_, bz_, current_;
};

SegmentSet DiscretizeCoil(const CoilGeometry& coil, Current current,
                          const DiscretizationSpec& spec);

// Field of the discretized coil at `point`. Coil plane is z = 0, axis is z.
Vec3 FieldAt(const CoilGeometry& coil, Current current, Vec3 point,
             const DiscretizationSpec& spec);

inline constexpr const char* kOracleModel = "biot_savart";

// Axial component H_z on the line y = 0, z = d for uniformly spaced x in
// [x_start, x_end]. Also fills `normalized` with H_z / H_z(x = 0).
FieldProfile LateralProfile(const CoilGeometry& coil, Current current,
                            Length distance, Length x_start, Length x_end,
                            int samples, const DiscretizationSpec& spec);

// Oracle on-axis profile, same layout as OnAxisProfile.
FieldProfile OracleAxisProfile(const CoilGeometry& coil, Current current,
                               Length start, Length end, int samples,
                               const DiscretizationSpec& spec);

struct SensorWindow {
  Length length = Millimeters(2.0);
  int samples = 64;  // >= 64
  // false: window spans [d, d + length] away from the coil.
  // true: window spans [d - length/2, d + length/2].
  bool centered = false;
};

// Mean axial field seen by a line sensor lying on the coil axis, computed by
// midpoint sampling of the oracle.
MagneticFieldH SensorAveragedField(const CoilGeometry& coil, Current current,
                                   Length distance, const SensorWindow& window,
                                   const DiscretizationSpec& spec);

}  // namespace microcoil
