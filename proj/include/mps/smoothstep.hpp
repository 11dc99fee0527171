#pragma once
// C-infinity transition profiles built from exp(-1/t).

#include <cmath>
#include <stdexcept>

namespace mps {

// 0 for t <= 0, 1 for t >= 1, monotone C-infinity in between
inline double smoothstep01(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

// radial cutoff: 1 for r <= r_one, 0 for r >= r_zero (r_one < r_zero)
inline double radial_cutoff(double r, double r_one, double r_zero) {
    return smoothstep01((r_zero - r) / (r_zero - r_one));
}

// smooth bump: 0 outside (lo,hi), 1 on [plateau_lo, plateau_hi]
struct Bump {
    double lo, plateau_lo, plateau_hi, hi;

    double operator()(double x) const {
        if (x <= lo || x >= hi) return 0.0;
        if (x < plateau_lo) return smoothstep01((x - lo) / (plateau_lo - lo));
        if (x <= plateau_hi) return 1.0;
        return smoothstep01((hi - x) / (hi - plateau_hi));
    }
};

// argument order (lo, hi, plateau_lo, plateau_hi); requires
// lo < plateau_lo < plateau_hi < hi
inline Bump build_bump_1d(double lo, double hi, double plateau_lo, double plateau_hi) {
    if (!(lo < plateau_lo && plateau_lo < plateau_hi && plateau_hi < hi))
        throw std::invalid_argument("build_bump_1d: need lo < plateau_lo < plateau_hi < hi");
    return Bump{lo, plateau_lo, plateau_hi, hi};
}

} // namespace mps
