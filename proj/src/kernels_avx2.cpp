// AVX2+FMA variants of the hot kernels. Compiled with -mavx2 -mfma; only
// reached when dispatch confirmed the CPU supports both. Summation order and
// FMA contraction differ from the scalar reference, so results match to
// rounding noise rather than bit for bit.

#include <immintrin.h>

#include "haulsim/kernels.hpp"

namespace haulsim::kernels::avx2 {

namespace {

double hsum(__m256d x) {
    __m128d lo = _mm256_castpd256_pd128(x);
    __m128d hi = _mm256_extractf128_pd(x, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

void power_series(const double* v, const double* dvdt, std::size_t n,
                  const PowerCoeffs& c, double* out_power) {
    const __m256d aero = _mm256_set1_pd(c.aero);
    const __m256d roll_grade = _mm256_set1_pd(c.roll + c.grade);
    const __m256d inertia = _mm256_set1_pd(c.inertia);
    const __m256d regen = _mm256_set1_pd(c.regen);
    const __m256d floor_w = _mm256_set1_pd(c.regen_floor_w);
    const __m256d zero = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vi = _mm256_loadu_pd(v + i);
        __m256d ai = _mm256_loadu_pd(dvdt + i);
        __m256d va = _mm256_mul_pd(vi, ai);

        // traction branch: v*(aero*v^2 + roll + grade) + inertia*v*dvdt
        __m256d poly = _mm256_fmadd_pd(aero, _mm256_mul_pd(vi, vi), roll_grade);
        __m256d traction = _mm256_fmadd_pd(inertia, va, _mm256_mul_pd(poly, vi));

        // regen branch: clamp(regen*v*dvdt) from below at the charge ceiling
        __m256d recovered = _mm256_max_pd(_mm256_mul_pd(regen, va), floor_w);

        __m256d braking = _mm256_cmp_pd(ai, zero, _CMP_LT_OQ);
        _mm256_storeu_pd(out_power + i,
                         _mm256_blendv_pd(traction, recovered, braking));
    }
    if (i < n) {
        scalar::power_series(v + i, dvdt + i, n - i, c, out_power + i);
    }
}

double trapezoid(const double* y, std::size_t n, double dx) {
    if (n < 2) {
        return 0.0;
    }
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_loadu_pd(y + i - 1);
        __m256d b = _mm256_loadu_pd(y + i);
        acc = _mm256_add_pd(acc, _mm256_add_pd(a, b));
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        total += y[i - 1] + y[i];
    }
    return 0.5 * dx * total;
}

}  // namespace haulsim::kernels::avx2
