#include "haulsim/kernels.hpp"

#include <cstdlib>
#include <string>

#include "haulsim/errors.hpp"

namespace haulsim::kernels {

namespace {

SimdLevel detect_level() {
#if defined(HAULSIM_HAVE_AVX2) && defined(__x86_64__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return SimdLevel::avx2;
    }
#endif
    return SimdLevel::scalar;
}

SimdLevel resolve_level() {
    SimdLevel best = detect_level();
    const char* force = std::getenv("HAULSIM_SIMD");
    if (force == nullptr || std::string(force) == "auto") {
        return best;
    }
    std::string want(force);
    if (want == "scalar") {
        return SimdLevel::scalar;
    }
    if (want == "avx2") {
        if (best != SimdLevel::avx2) {
            throw ConfigError("HAULSIM_SIMD=avx2 requested but this build or "
                              "CPU does not support AVX2+FMA");
        }
        return SimdLevel::avx2;
    }
    throw ConfigError("HAULSIM_SIMD must be scalar, avx2, or auto (got '" +
                      want + "')");
}

}  // namespace

SimdLevel active_level() {
    static const SimdLevel level = resolve_level();
    return level;
}

std::string level_name(SimdLevel level) {
    switch (level) {
        case SimdLevel::avx2: return "avx2";
        case SimdLevel::scalar: break;
    }
    return "scalar";
}

void power_series(const double* v, const double* dvdt, std::size_t n,
                  const PowerCoeffs& c, double* out_power) {
#if defined(HAULSIM_HAVE_AVX2) && defined(__x86_64__)
    if (active_level() == SimdLevel::avx2) {
        avx2::power_series(v, dvdt, n, c, out_power);
        return;
    }
#endif
    scalar::power_series(v, dvdt, n, c, out_power);
}

double trapezoid(const double* y, std::size_t n, double dx) {
#if defined(HAULSIM_HAVE_AVX2) && defined(__x86_64__)
    if (active_level() == SimdLevel::avx2) {
        return avx2::trapezoid(y, n, dx);
    }
#endif
    return scalar::trapezoid(y, n, dx);
}

}  // namespace haulsim::kernels
