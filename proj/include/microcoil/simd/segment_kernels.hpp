#pragma once

// Straight-segment Biot-Savart summation kernels. The scalar kernel is the
// reference; vector variants must agree with it to rounding (see
// tests/segment_kernels_test.cpp). This header is included by translation
// units built with ISA-specific flags, so it pulls in nothing beyond
// <cstddef>.

#include <cstddef>

namespace microcoil::simd {

// Struct-of-arrays view over `size` segments a[i] -> b[i] carrying current[i].
struct SegmentSpan {
  const double* ax;
  const double* ay;
  const double* az;
  const double* bx;
  const double* by;
  const double* bz;
  const double* current;
  std::size_t size;
};

struct FieldSum {
  double hx = 0.0;
  double hy = 0.0;
  double hz = 0.0;
  // Some segment passed within kSingularityGuard of the evaluation point;
  // that segment's contribution is dropped and the sum must not be used.
  bool singular = false;
};

inline constexpr double kSingularityGuard = 1e-12;  // m

enum class Isa { kScalar, kAvx2, kNeon };

const char* IsaName(Isa isa);

// Compiled in and supported by the running CPU.
bool IsaAvailable(Isa isa);

// Widest available variant.
Isa BestIsa();

// BestIsa() unless MICROCOIL_KERNEL=scalar|avx2|neon names another available
// variant. Resolved once per process.
Isa ActiveIsa();

FieldSum SumSegmentsScalar(const SegmentSpan& segments, double px, double py,
                           double pz);
#if defined(MICROCOIL_HAVE_AVX2)
FieldSum SumSegmentsAvx2(const SegmentSpan& segments, double px, double py,
                         double pz);
#endif
#if defined(MICROCOIL_HAVE_NEON)
FieldSum SumSegmentsNeon(const SegmentSpan& segments, double px, double py,
                         double pz);
#endif

// Dispatches to `isa`; falls back to scalar when it is unavailable.
FieldSum SumSegments(const SegmentSpan& segments, double px, double py,
                     double pz, Isa isa);

}  // namespace microcoil::simd
