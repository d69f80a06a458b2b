#pragma once

#include <cstddef>
#include <string>

// Hot inner loops of the cycle simulation. Each kernel exists as a scalar
// reference implementation and, on x86-64, an AVX2+FMA variant. The variant
// is picked once at startup from cpuid; set HAULSIM_SIMD=scalar (or avx2) to
// force one. Vector variants must agree with the scalar reference to within
// floating-point reassociation noise; the equivalence tests pin that down.

namespace haulsim::kernels {

enum class SimdLevel { scalar, avx2 };

SimdLevel active_level();
std::string level_name(SimdLevel level);

// Road-load model folded into per-term coefficients, all SI. For dvdt >= 0:
//   p = aero*v^3 + (roll + grade)*v + inertia*v*dvdt
// For dvdt < 0 the sample is a braking event and recovers
//   p = max(regen*v*dvdt, regen_floor_w)   (both negative)
struct PowerCoeffs {
    double aero;           // 0.5*rho*cd*area/eta_bw
    double roll;           // crr*mass*g/eta_bw
    double grade;          // grade_fraction*grade*mass*g/eta_bw
    double inertia;        // mass/eta_bw
    double regen;          // mass*eta_bw*eta_brake
    double regen_floor_w;  // most negative admissible charge power (<= 0)
};

void power_series(const double* v, const double* dvdt, std::size_t n,
                  const PowerCoeffs& c, double* out_power);

// Trapezoidal integral of n uniformly spaced samples, spacing dx.
double trapezoid(const double* y, std::size_t n, double dx);

namespace scalar {
void power_series(const double* v, const double* dvdt, std::size_t n,
                  const PowerCoeffs& c, double* out_power);
double trapezoid(const double* y, std::size_t n, double dx);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
void power_series(const double* v, const double* dvdt, std::size_t n,
                  const PowerCoeffs& c, double* out_power);
double trapezoid(const double* y, std::size_t n, double dx);
}  // namespace avx2
#endif

}  // namespace haulsim::kernels
