// Built with -mavx2 -mfma; only reached after IsaAvailable(Isa::kAvx2).

#include <immintrin.h>

#include "microcoil/simd/segment_kernels.hpp"

namespace microcoil::simd {

FieldSum SumSegmentsAvx2(const SegmentSpan& s, double px, double py,
                         double pz) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d vpz = _mm256_set1_pd(pz);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d guard2 =
      _mm256_set1_pd(kSingularityGuard * kSingularityGuard);

  __m256d acc_x = zero;
  __m256d acc_y = zero;
  __m256d acc_z = zero;
  __m256d singular = zero;

  const std::size_t n_vec = s.size - s.size % 4;
  for (std::size_t i = 0; i < n_vec; i += 4) {
    const __m256d ax = _mm256_sub_pd(_mm256_loadu_pd(s.ax + i), vpx);
    const __m256d ay = _mm256_sub_pd(_mm256_loadu_pd(s.ay + i), vpy);
    const __m256d az = _mm256_sub_pd(_mm256_loadu_pd(s.az + i), vpz);
    const __m256d bx = _mm256_sub_pd(_mm256_loadu_pd(s.bx + i), vpx);
    const __m256d by = _mm256_sub_pd(_mm256_loadu_pd(s.by + i), vpy);
    const __m256d bz = _mm256_sub_pd(_mm256_loadu_pd(s.bz + i), vpz);
    const __m256d cur = _mm256_loadu_pd(s.current + i);

    const __m256d la = _mm256_sqrt_pd(_mm256_fmadd_pd(
        ax, ax, _mm256_fmadd_pd(ay, ay, _mm256_mul_pd(az, az))));
    const __m256d lb = _mm256_sqrt_pd(_mm256_fmadd_pd(
        bx, bx, _mm256_fmadd_pd(by, by, _mm256_mul_pd(bz, bz))));
    const __m256d dot = _mm256_fmadd_pd(
        ax, bx, _mm256_fmadd_pd(ay, by, _mm256_mul_pd(az, bz)));
    const __m256d cx = _mm256_fmsub_pd(ay, bz, _mm256_mul_pd(az, by));
    const __m256d cy = _mm256_fmsub_pd(az, bx, _mm256_mul_pd(ax, bz));
    const __m256d cz = _mm256_fmsub_pd(ax, by, _mm256_mul_pd(ay, bx));

    const __m256d lx = _mm256_sub_pd(bx, ax);
    const __m256d ly = _mm256_sub_pd(by, ay);
    const __m256d lz = _mm256_sub_pd(bz, az);
    const __m256d ll = _mm256_fmadd_pd(
        lx, lx, _mm256_fmadd_pd(ly, ly, _mm256_mul_pd(lz, lz)));
    const __m256d al = _mm256_fmadd_pd(
        ax, lx, _mm256_fmadd_pd(ay, ly, _mm256_mul_pd(az, lz)));
    __m256d t = _mm256_div_pd(_mm256_sub_pd(zero, al), ll);
    t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
    const __m256d ex = _mm256_fmadd_pd(t, lx, ax);
    const __m256d ey = _mm256_fmadd_pd(t, ly, ay);
    const __m256d ez = _mm256_fmadd_pd(t, lz, az);
    const __m256d e2 = _mm256_fmadd_pd(
        ex, ex, _mm256_fmadd_pd(ey, ey, _mm256_mul_pd(ez, ez)));
    const __m256d near = _mm256_cmp_pd(e2, guard2, _CMP_LT_OQ);
    singular = _mm256_or_pd(singular, near);

    const __m256d prod = _mm256_mul_pd(la, lb);
    __m256d f = _mm256_div_pd(_mm256_mul_pd(cur, _mm256_add_pd(la, lb)),
                              _mm256_mul_pd(prod, _mm256_add_pd(prod, dot)));
    f = _mm256_blendv_pd(f, zero, near);
    acc_x = _mm256_fmadd_pd(f, cx, acc_x);
    acc_y = _mm256_fmadd_pd(f, cy, acc_y);
    acc_z = _mm256_fmadd_pd(f, cz, acc_z);
  }

  alignas(32) double lanes_x[4];
  alignas(32) double lanes_y[4];
  alignas(32) double lanes_z[4];
  _mm256_store_pd(lanes_x, acc_x);
  _mm256_store_pd(lanes_y, acc_y);
  _mm256_store_pd(lanes_z, acc_z);

  // Fixed lane order keeps the reduction reproducible.
  const double sum_x = (lanes_x[0] + lanes_x[1]) + (lanes_x[2] + lanes_x[3]);
  const double sum_y = (lanes_y[0] + lanes_y[1]) + (lanes_y[2] + lanes_y[3]);
  const double sum_z = (lanes_z[0] + lanes_z[1]) + (lanes_z[2] + lanes_z[3]);

  const SegmentSpan tail{s.ax + n_vec, s.ay + n_vec, s.az + n_vec,
                         s.bx + n_vec, s.by + n_vec, s.bz + n_vec,
                         s.current + n_vec, s.size - n_vec};
  FieldSum out = SumSegmentsScalar(tail, px, py, pz);

  constexpr double kInv4Pi = 0.25 / 3.14159265358979323846;
  out.hx += sum_x * kInv4Pi;
  out.hy += sum_y * kInv4Pi;
  out.hz += sum_z * kInv4Pi;
  out.singular = out.singular || _mm256_movemask_pd(singular) != 0;
  return out;
}

}  // namespace microcoil::simd
