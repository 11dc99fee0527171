#include "mps/norms.hpp"

#include "mps/kernels.hpp"
#include "mps/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace mps {

namespace {

void check_exponent(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("norm exponent must be in [1, inf]");
}

double reduce_lp(const double* v, std::size_t n, double p, double weight) {
    const auto& k = kernels::ops();
    if (p == inf) return k.max_abs(v, n);
    if (p == 2.0) return std::sqrt(k.sum_sq(v, n) * weight);
    double s = 0.0;
    if (p == 1.0) {
        for (std::size_t i = 0; i < n; ++i) s += std::fabs(v[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(v[i]), p);
    }
    return std::pow(s * weight, 1.0 / p);
}

} // namespace

double lp_norm_samples(const WaveGrid& g, const double* v, std::size_t n, double p) {
    check_exponent(p);
    return reduce_lp(v, n, p, g.cell_volume());
}

double lp_norm_physical(const SpectralField& f, double p) {
    check_exponent(p);
    const auto v = transform::to_physical(f);
    return reduce_lp(v.data(), v.size(), p, f.grid().cell_volume());
}

double lp_norm_physical(const VectorSpectralField& f, double p) {
    check_exponent(p);
    const auto v1 = transform::to_physical(f[0]);
    const auto v2 = transform::to_physical(f[1]);
    const auto v3 = transform::to_physical(f[2]);
    aligned_vector<double> mag(v1.size());
    for (std::size_t i = 0; i < mag.size(); ++i)
        mag[i] = std::sqrt(v1[i] * v1[i] + v2[i] * v2[i] + v3[i] * v3[i]);
    return reduce_lp(mag.data(), mag.size(), p, f.grid().cell_volume());
}

double lq_norm_fourier(const SpectralField& f, double q) {
    check_exponent(q);
    const double cf = f.grid().continuum_factor();
    const auto& k = kernels::ops();
    if (q == inf) return cf * k.cmax_abs(f.data(), f.size());
    if (q == 2.0) return cf * std::sqrt(k.csum_sq(f.data(), f.size()) * f.grid().delta_xi());
    double s = 0.0;
    const cplx* z = f.data();
    if (q == 1.0) {
        for (std::size_t i = 0; i < f.size(); ++i) s += std::abs(z[i]);
    } else {
        for (std::size_t i = 0; i < f.size(); ++i) s += std::pow(std::abs(z[i]), q);
    }
    return cf * std::pow(s * f.grid().delta_xi(), 1.0 / q);
}

double inner_product(const SpectralField& f, const SpectralField& g) {
    f.check_same_grid(g);
    const cplx* a = f.data();
    const cplx* b = g.data();
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return s * f.grid().volume();
}

double l2_sq_parseval(const SpectralField& f) {
    return f.grid().volume() * kernels::ops().csum_sq(f.data(), f.size());
}

double l2_sq_parseval(const VectorSpectralField& f) {
    return l2_sq_parseval(f[0]) + l2_sq_parseval(f[1]) + l2_sq_parseval(f[2]);
}

} // namespace mps
