// AArch64 Advanced SIMD variant, two doubles per lane group.

#include <arm_neon.h>

#include "microcoil/simd/segment_kernels.hpp"

namespace microcoil::simd {

FieldSum SumSegmentsNeon(const SegmentSpan& s, double px, double py,
                         double pz) {
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  const float64x2_t vpz = vdupq_n_f64(pz);
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t guard2 =
      vdupq_n_f64(kSingularityGuard * kSingularityGuard);

  float64x2_t acc_x = zero;
  float64x2_t acc_y = zero;
  float64x2_t acc_z = zero;
  uint64x2_t singular = vdupq_n_u64(0);

  const std::size_t n_vec = s.size - s.size % 2;
  for (std::size_t i = 0; i < n_vec; i += 2) {
    const float64x2_t ax = vsubq_f64(vld1q_f64(s.ax + i), vpx);
    const float64x2_t ay = vsubq_f64(vld1q_f64(s.ay + i), vpy);
    const float64x2_t az = vsubq_f64(vld1q_f64(s.az + i), vpz);
    const float64x2_t bx = vsubq_f64(vld1q_f64(s.bx + i), vpx);
    const float64x2_t by = vsubq_f64(vld1q_f64(s.by + i), vpy);
    const float64x2_t bz = vsubq_f64(vld1q_f64(s.bz + i), vpz);
    const float64x2_t cur = vld1q_f64(s.current + i);

    const float64x2_t la = vsqrtq_f64(
        vfmaq_f64(vfmaq_f64(vmulq_f64(az, az), ay, ay), ax, ax));
    const float64x2_t lb = vsqrtq_f64(
        vfmaq_f64(vfmaq_f64(vmulq_f64(bz, bz), by, by), bx, bx));
    const float64x2_t dot =
        vfmaq_f64(vfmaq_f64(vmulq_f64(az, bz), ay, by), ax, bx);
    const float64x2_t cx = vfmsq_f64(vmulq_f64(ay, bz), az, by);
    const float64x2_t cy = vfmsq_f64(vmulq_f64(az, bx), ax, bz);
    const float64x2_t cz = vfmsq_f64(vmulq_f64(ax, by), ay, bx);

    const float64x2_t lx = vsubq_f64(bx, ax);
    const float64x2_t ly = vsubq_f64(by, ay);
    const float64x2_t lz = vsubq_f64(bz, az);
    const float64x2_t ll =
        vfmaq_f64(vfmaq_f64(vmulq_f64(lz, lz), ly, ly), lx, lx);
    const float64x2_t al =
        vfmaq_f64(vfmaq_f64(vmulq_f64(az, lz), ay, ly), ax, lx);
    float64x2_t t = vdivq_f64(vnegq_f64(al), ll);
    t = vminq_f64(vmaxq_f64(t, zero), one);
    const float64x2_t ex = vfmaq_f64(ax, t, lx);
    const float64x2_t ey = vfmaq_f64(ay, t, ly);
    const float64x2_t ez = vfmaq_f64(az, t, lz);
    const float64x2_t e2 =
        vfmaq_f64(vfmaq_f64(vmulq_f64(ez, ez), ey, ey), ex, ex);
    const uint64x2_t near = vcltq_f64(e2, guard2);
    singular = vorrq_u64(singular, near);

    const float64x2_t prod = vmulq_f64(la, lb);
    float64x2_t f = vdivq_f64(vmulq_f64(cur, vaddq_f64(la, lb)),
                              vmulq_f64(prod, vaddq_f64(prod, dot)));
    f = vbslq_f64(near, zero, f);
    acc_x = vfmaq_f64(acc_x, f, cx);
    acc_y = vfmaq_f64(acc_y, f, cy);
    acc_z = vfmaq_f64(acc_z, f, cz);
  }

  const double sum_x = vgetq_lane_f64(acc_x, 0) + vgetq_lane_f64(acc_x, 1);
  const double sum_y = vgetq_lane_f64(acc_y, 0) + vgetq_lane_f64(acc_y, 1);
  const double sum_z = vgetq_lane_f64(acc_z, 0) + vgetq_lane_f64(acc_z, 1);

  const SegmentSpan tail{s.ax + n_vec, s.ay + n_vec, s.az + n_vec,
                         s.bx + n_vec, s.by + n_vec, s.bz + n_vec,
                         s.current + n_vec, s.size - n_vec};
  FieldSum out = SumSegmentsScalar(tail, px, py, pz);

  constexpr double kInv4Pi = 0.25 / 3.14159265358979323846;
  out.hx += sum_x * kInv4Pi;
  out.hy += sum_y * kInv4Pi;
  out.hz += sum_z * kInv4Pi;
  out.singular = out.singular || (vgetq_lane_u64(singular, 0) |
                                  vgetq_lane_u64(singular, 1)) != 0;
  return out;
}

}  // namespace microcoil::simd
