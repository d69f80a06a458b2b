#include <algorithm>

#include "haulsim/kernels.hpp"

namespace haulsim::kernels::scalar {

void power_series(const double* v, const double* dvdt, std::size_t n,
                  const PowerCoeffs& c, double* out_power) {
    for (std::size_t i = 0; i < n; ++i) {
        double vi = v[i];
        double ai = dvdt[i];
        if (ai < 0.0) {
            out_power[i] = std::max(c.regen * vi * ai, c.regen_floor_w);
        } else {
            out_power[i] =
                c.aero * vi * vi * vi + (c.roll + c.grade) * vi + c.inertia * vi * ai;
        }
    }
}

double trapezoid(const double* y, std::size_t n, double dx) {
    if (n < 2) {
        return 0.0;
    }
    double acc = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        acc += y[i - 1] + y[i];
    }
    return 0.5 * dx * acc;
}

}  // namespace haulsim::kernels::scalar
