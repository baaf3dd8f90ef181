#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string_view>

#include "microcoil/simd/segment_kernels.hpp"

namespace microcoil::simd {

const char* IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool IsaAvailable(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(MICROCOIL_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(MICROCOIL_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa BestIsa() {
  if (IsaAvailable(Isa::kAvx2)) return Isa::kAvx2;
  if (IsaAvailable(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

namespace {

Isa ResolveActiveIsa() {
  const char* requested = std::getenv("MICROCOIL_KERNEL");
  if (requested != nullptr) {
    const std::string_view name(requested);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (name == IsaName(isa) && IsaAvailable(isa)) return isa;
    }
  }
  return BestIsa();
}

}  // namespace

Isa ActiveIsa() {
  static const Isa active = ResolveActiveIsa();
  return active;
}

FieldSum SumSegmentsScalar(const SegmentSpan& s, double px, double py,
                           double pz) {
  constexpr double kGuard2 = kSingularityGuard * kSingularityGuard;
  FieldSum out;
  double hx = 0.0;
  double hy = 0.0;
  double hz = 0.0;
  for (std::size_t i = 0; i < s.size; ++i) {
    const double ax = s.ax[i] - px;
    const double ay = s.ay[i] - py;
    const double az = s.az[i] - pz;
    const double bx = s.bx[i] - px;
    const double by = s.by[i] - py;
    const double bz = s.bz[i] - pz;

    const double la = std::sqrt(ax * ax + ay * ay + az * az);
    const double lb = std::sqrt(bx * bx + by * by + bz * bz);
    const double dot = ax * bx + ay * by + az * bz;
    const double cx = ay * bz - az * by;
    const double cy = az * bx - ax * bz;
    const double cz = ax * by - ay * bx;

    // Distance from the point to the closed segment.
    const double lx = bx - ax;
    const double ly = by - ay;
    const double lz = bz - az;
    const double ll = lx * lx + ly * ly + lz * lz;
    double t = -(ax * lx + ay * ly + az * lz) / ll;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    const double ex = ax + t * lx;
    const double ey = ay + t * ly;
    const double ez = az + t * lz;
    if (ex * ex + ey * ey + ez * ez < kGuard2) {
      out.singular = true;
      continue;
    }

    const double prod = la * lb;
    const double f = s.current[i] * (la + lb) / (prod * (prod + dot));
    hx += f * cx;
    hy += f * cy;
    hz += f * cz;
  }
  constexpr double kInv4Pi = 0.25 / std::numbers::pi;
  out.hx = hx * kInv4Pi;
  out.hy = hy * kInv4Pi;
  out.hz = hz * kInv4Pi;
  return out;
}

FieldSum SumSegments(const SegmentSpan& segments, double px, double py,
                     double pz, Isa isa) {
  if (!IsaAvailable(isa)) isa = Isa::kScalar;
  switch (isa) {
#if defined(MICROCOIL_HAVE_AVX2)
    case Isa::kAvx2:
      return SumSegmentsAvx2(segments, px, py, pz);
#endif
#if defined(MICROCOIL_HAVE_NEON)
    case Isa::kNeon:
      return SumSegmentsNeon(segments, px, py, pz);
#endif
    default:
      return SumSegmentsScalar(segments, px, py, pz);
  }
}

}  // namespace microcoil::simd
