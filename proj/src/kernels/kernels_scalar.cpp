// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against.

#include "mps/kernels.hpp"

#include <cmath>

namespace mps::kernels {
namespace {

void s_mul(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void s_mul_add(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a[i] * b[i];
}

void s_mul_mul_sub(double* out, const double* a, const double* b,
                   const double* c, const double* d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

void s_axpy(double* y, double alpha, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void s_cscale_table(cplx* f, const double* t, std::size_t n) {
    auto* d = reinterpret_cast<double*>(f);
    for (std::size_t i = 0; i < n; ++i) {
        d[2 * i] *= t[i];
        d[2 * i + 1] *= t[i];
    }
}

void s_cscale_table_to(cplx* out, const cplx* in, const double* t, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* p = reinterpret_cast<const double*>(in);
    for (std::size_t i = 0; i < n; ++i) {
        o[2 * i] = p[2 * i] * t[i];
        o[2 * i + 1] = p[2 * i + 1] * t[i];
    }
}

void s_cmul_i_table(cplx* out, const cplx* in, const double* t, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* p = reinterpret_cast<const double*>(in);
    for (std::size_t i = 0; i < n; ++i) {
        const double re = p[2 * i], im = p[2 * i + 1];
        o[2 * i] = -t[i] * im;
        o[2 * i + 1] = t[i] * re;
    }
}

void s_cmul_i_table_add(cplx* out, const cplx* in, const double* t, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* p = reinterpret_cast<const double*>(in);
    for (std::size_t i = 0; i < n; ++i) {
        const double re = p[2 * i], im = p[2 * i + 1];
        o[2 * i] -= t[i] * im;
        o[2 * i + 1] += t[i] * re;
    }
}

void s_caxpy(cplx* y, double alpha, const cplx* x, std::size_t n) {
    auto* o = reinterpret_cast<double*>(y);
    const auto* p = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < 2 * n; ++i) o[i] += alpha * p[i];
}

void s_cadd(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* pa = reinterpret_cast<const double*>(a);
    const auto* pb = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < 2 * n; ++i) o[i] = pa[i] + pb[i];
}

void s_csub(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* pa = reinterpret_cast<const double*>(a);
    const auto* pb = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < 2 * n; ++i) o[i] = pa[i] - pb[i];
}

void s_real_part(double* out, const cplx* in, std::size_t n) {
    const auto* p = reinterpret_cast<const double*>(in);
    for (std::size_t i = 0; i < n; ++i) out[i] = p[2 * i];
}

void s_make_complex(cplx* out, const double* in, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < n; ++i) {
        o[2 * i] = in[i];
        o[2 * i + 1] = 0.0;
    }
}

double s_sum_sq(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

double s_max_abs(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

double s_csum_sq(const cplx* z, std::size_t n) {
    const auto* p = reinterpret_cast<const double*>(z);
    double s = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i) s += p[i] * p[i];
    return s;
}

double s_cmax_abs(const cplx* z, std::size_t n) {
    const auto* p = reinterpret_cast<const double*>(z);
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = p[2 * i] * p[2 * i] + p[2 * i + 1] * p[2 * i + 1];
        m = std::max(m, q);
    }
    return std::sqrt(m);
}

void s_green2_apply(cplx* a, cplx* m, const double* g00, const double* g01,
                    const double* g10, const double* g11, std::size_t n) {
    auto* pa = reinterpret_cast<double*>(a);
    auto* pm = reinterpret_cast<double*>(m);
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = pa[2 * i], ai = pa[2 * i + 1];
        const double mr = pm[2 * i], mi = pm[2 * i + 1];
        pa[2 * i] = g00[i] * ar + g01[i] * mr;
        pa[2 * i + 1] = g00[i] * ai + g01[i] * mi;
        pm[2 * i] = g10[i] * ar + g11[i] * mr;
        pm[2 * i + 1] = g10[i] * ai + g11[i] * mi;
    }
}

void s_prop6_apply(cplx* v1, cplx* v2, cplx* v3, cplx* c1, cplx* c2, cplx* c3,
                   const double* e, std::size_t n) {
    cplx* f[6] = {v1, v2, v3, c1, c2, c3};
    for (std::size_t i = 0; i < n; ++i) {
        double re[6], im[6];
        for (int c = 0; c < 6; ++c) {
            re[c] = f[c][i].real();
            im[c] = f[c][i].imag();
        }
        for (int r = 0; r < 3; ++r) {
            // v_out = E11*v + i*E12*c
            double orr = 0.0, oi = 0.0;
            for (int c = 0; c < 3; ++c) {
                const double e1 = e[(r * 6 + c) * n + i];
                const double e2 = e[(r * 6 + c + 3) * n + i];
                orr += e1 * re[c] - e2 * im[c + 3];
                oi += e1 * im[c] + e2 * re[c + 3];
            }
            f[r][i] = cplx(orr, oi);
        }
        for (int r = 3; r < 6; ++r) {
            // c_out = -i*E21*v + E22*c
            double orr = 0.0, oi = 0.0;
            for (int c = 0; c < 3; ++c) {
                const double e1 = e[(r * 6 + c) * n + i];
                const double e2 = e[(r * 6 + c + 3) * n + i];
                orr += e1 * im[c] + e2 * re[c + 3];
                oi += -e1 * re[c] + e2 * im[c + 3];
            }
            f[r][i] = cplx(orr, oi);
        }
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops t = {
        "scalar",
        s_mul, s_mul_add, s_mul_mul_sub, s_axpy,
        s_cscale_table, s_cscale_table_to, s_cmul_i_table, s_cmul_i_table_add,
        s_caxpy, s_cadd, s_csub,
        s_real_part, s_make_complex,
        s_sum_sq, s_max_abs, s_csum_sq, s_cmax_abs,
        s_green2_apply, s_prop6_apply,
    };
    return t;
}

} // namespace mps::kernels
