// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; it is only ever dispatched to after a CPUID check.

#include "mps/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace mps::kernels {
namespace {

// [re0,im0,re1,im1],[re2,im2,re3,im3] -> [re0..re3],[im0..im3]
inline void deinterleave(__m256d lo, __m256d hi, __m256d& re, __m256d& im) {
    __m256d a = _mm256_unpacklo_pd(lo, hi); // re0 re2 re1 re3
    __m256d b = _mm256_unpackhi_pd(lo, hi); // im0 im2 im1 im3
    re = _mm256_permute4x64_pd(a, _MM_SHUFFLE(3, 1, 2, 0));
    im = _mm256_permute4x64_pd(b, _MM_SHUFFLE(3, 1, 2, 0));
}

inline void interleave(__m256d re, __m256d im, __m256d& lo, __m256d& hi) {
    __m256d a = _mm256_permute4x64_pd(re, _MM_SHUFFLE(3, 1, 2, 0)); // re0 re2 re1 re3
    __m256d b = _mm256_permute4x64_pd(im, _MM_SHUFFLE(3, 1, 2, 0));
    lo = _mm256_unpacklo_pd(a, b);
    hi = _mm256_unpackhi_pd(a, b);
}

void a_mul(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void a_mul_add(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d o = _mm256_loadu_pd(out + i);
        o = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), o);
        _mm256_storeu_pd(out + i, o);
    }
    for (; i < n; ++i) out[i] += a[i] * b[i];
}

void a_mul_mul_sub(double* out, const double* a, const double* b,
                   const double* c, const double* d, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d cd = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i));
        __m256d r = _mm256_fmsub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), cd);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

void a_axpy(double* y, double alpha, const double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d o = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, o);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

inline __m256d dup_lo(__m256d t) { return _mm256_permute4x64_pd(t, _MM_SHUFFLE(1, 1, 0, 0)); }
inline __m256d dup_hi(__m256d t) { return _mm256_permute4x64_pd(t, _MM_SHUFFLE(3, 3, 2, 2)); }

void a_cscale_table(cplx* f, const double* t, std::size_t n) {
    auto* d = reinterpret_cast<double*>(f);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d tv = _mm256_loadu_pd(t + i);
        __m256d lo = _mm256_mul_pd(_mm256_loadu_pd(d + 2 * i), dup_lo(tv));
        __m256d hi = _mm256_mul_pd(_mm256_loadu_pd(d + 2 * i + 4), dup_hi(tv));
        _mm256_storeu_pd(d + 2 * i, lo);
        _mm256_storeu_pd(d + 2 * i + 4, hi);
    }
    for (; i < n; ++i) {
        d[2 * i] *= t[i];
        d[2 * i + 1] *= t[i];
    }
}

void a_cscale_table_to(cplx* out, const cplx* in, const double* t, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* p = reinterpret_cast<const double*>(in);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d tv = _mm256_loadu_pd(t + i);
        _mm256_storeu_pd(o + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(p + 2 * i), dup_lo(tv)));
        _mm256_storeu_pd(o + 2 * i + 4, _mm256_mul_pd(_mm256_loadu_pd(p + 2 * i + 4), dup_hi(tv)));
    }
    for (; i < n; ++i) {
        o[2 * i] = p[2 * i] * t[i];
        o[2 * i + 1] = p[2 * i + 1] * t[i];
    }
}

// (re,im) -> (-t*im, t*re)
void a_cmul_i_table(cplx* out, const cplx* in, const double* t, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* p = reinterpret_cast<const double*>(in);
    const __m256d signs = _mm256_set_pd(0.0, -0.0, 0.0, -0.0); // negate lanes 0,2
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d tv = _mm256_loadu_pd(t + i);
        __m256d lo = _mm256_permute_pd(_mm256_loadu_pd(p + 2 * i), 0x5); // im re im re
        __m256d hi = _mm256_permute_pd(_mm256_loadu_pd(p + 2 * i + 4), 0x5);
        lo = _mm256_xor_pd(_mm256_mul_pd(lo, dup_lo(tv)), signs);
        hi = _mm256_xor_pd(_mm256_mul_pd(hi, dup_hi(tv)), signs);
        _mm256_storeu_pd(o + 2 * i, lo);
        _mm256_storeu_pd(o + 2 * i + 4, hi);
    }
    for (; i < n; ++i) {
        const double re = p[2 * i], im = p[2 * i + 1];
        o[2 * i] = -t[i] * im;
        o[2 * i + 1] = t[i] * re;
    }
}

void a_cmul_i_table_add(cplx* out, const cplx* in, const double* t, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* p = reinterpret_cast<const double*>(in);
    const __m256d signs = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d tv = _mm256_loadu_pd(t + i);
        __m256d lo = _mm256_permute_pd(_mm256_loadu_pd(p + 2 * i), 0x5);
        __m256d hi = _mm256_permute_pd(_mm256_loadu_pd(p + 2 * i + 4), 0x5);
        lo = _mm256_xor_pd(_mm256_mul_pd(lo, dup_lo(tv)), signs);
        hi = _mm256_xor_pd(_mm256_mul_pd(hi, dup_hi(tv)), signs);
        _mm256_storeu_pd(o + 2 * i, _mm256_add_pd(_mm256_loadu_pd(o + 2 * i), lo));
        _mm256_storeu_pd(o + 2 * i + 4, _mm256_add_pd(_mm256_loadu_pd(o + 2 * i + 4), hi));
    }
    for (; i < n; ++i) {
        const double re = p[2 * i], im = p[2 * i + 1];
        o[2 * i] -= t[i] * im;
        o[2 * i + 1] += t[i] * re;
    }
}

void a_caxpy(cplx* y, double alpha, const cplx* x, std::size_t n) {
    a_axpy(reinterpret_cast<double*>(y), alpha, reinterpret_cast<const double*>(x), 2 * n);
}

void a_cadd(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* pa = reinterpret_cast<const double*>(a);
    const auto* pb = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 4 <= 2 * n; i += 4)
        _mm256_storeu_pd(o + i, _mm256_add_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
    for (; i < 2 * n; ++i) o[i] = pa[i] + pb[i];
}

void a_csub(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const auto* pa = reinterpret_cast<const double*>(a);
    const auto* pb = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 4 <= 2 * n; i += 4)
        _mm256_storeu_pd(o + i, _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
    for (; i < 2 * n; ++i) o[i] = pa[i] - pb[i];
}

void a_real_part(double* out, const cplx* in, std::size_t n) {
    const auto* p = reinterpret_cast<const double*>(in);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d lo = _mm256_loadu_pd(p + 2 * i);
        __m256d hi = _mm256_loadu_pd(p + 2 * i + 4);
        __m256d re, im;
        deinterleave(lo, hi, re, im);
        _mm256_storeu_pd(out + i, re);
    }
    for (; i < n; ++i) out[i] = p[2 * i];
}

void a_make_complex(cplx* out, const double* in, std::size_t n) {
    auto* o = reinterpret_cast<double*>(out);
    const __m256d z = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(in + i);
        __m256d lo, hi;
        interleave(v, z, lo, hi);
        _mm256_storeu_pd(o + 2 * i, lo);
        _mm256_storeu_pd(o + 2 * i + 4, hi);
    }
    for (; i < n; ++i) {
        o[2 * i] = in[i];
        o[2 * i + 1] = 0.0;
    }
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double a_sum_sq(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

double a_max_abs(const double* x, std::size_t n) {
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(_mm256_loadu_pd(x + i), absmask));
    double m = hmax(acc);
    for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

double a_csum_sq(const cplx* z, std::size_t n) {
    return a_sum_sq(reinterpret_cast<const double*>(z), 2 * n);
}

double a_cmax_abs(const cplx* z, std::size_t n) {
    const auto* p = reinterpret_cast<const double*>(z);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d lo = _mm256_loadu_pd(p + 2 * i);
        __m256d hi = _mm256_loadu_pd(p + 2 * i + 4);
        // |z|^2 per complex, order-scrambled (max is order-free)
        acc = _mm256_max_pd(acc, _mm256_hadd_pd(_mm256_mul_pd(lo, lo), _mm256_mul_pd(hi, hi)));
    }
    double m = hmax(acc);
    for (; i < n; ++i) {
        const double q = p[2 * i] * p[2 * i] + p[2 * i + 1] * p[2 * i + 1];
        m = std::max(m, q);
    }
    return std::sqrt(m);
}

void a_green2_apply(cplx* a, cplx* m, const double* g00, const double* g01,
                    const double* g10, const double* g11, std::size_t n) {
    auto* pa = reinterpret_cast<double*>(a);
    auto* pm = reinterpret_cast<double*>(m);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d ar, ai, mr, mi;
        deinterleave(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pa + 2 * i + 4), ar, ai);
        deinterleave(_mm256_loadu_pd(pm + 2 * i), _mm256_loadu_pd(pm + 2 * i + 4), mr, mi);
        __m256d v00 = _mm256_loadu_pd(g00 + i), v01 = _mm256_loadu_pd(g01 + i);
        __m256d v10 = _mm256_loadu_pd(g10 + i), v11 = _mm256_loadu_pd(g11 + i);
        __m256d nar = _mm256_fmadd_pd(v00, ar, _mm256_mul_pd(v01, mr));
        __m256d nai = _mm256_fmadd_pd(v00, ai, _mm256_mul_pd(v01, mi));
        __m256d nmr = _mm256_fmadd_pd(v10, ar, _mm256_mul_pd(v11, mr));
        __m256d nmi = _mm256_fmadd_pd(v10, ai, _mm256_mul_pd(v11, mi));
        __m256d lo, hi;
        interleave(nar, nai, lo, hi);
        _mm256_storeu_pd(pa + 2 * i, lo);
        _mm256_storeu_pd(pa + 2 * i + 4, hi);
        interleave(nmr, nmi, lo, hi);
        _mm256_storeu_pd(pm + 2 * i, lo);
        _mm256_storeu_pd(pm + 2 * i + 4, hi);
    }
    for (; i < n; ++i) {
        const double ar = pa[2 * i], ai = pa[2 * i + 1];
        const double mr = pm[2 * i], mi = pm[2 * i + 1];
        pa[2 * i] = g00[i] * ar + g01[i] * mr;
        pa[2 * i + 1] = g00[i] * ai + g01[i] * mi;
        pm[2 * i] = g10[i] * ar + g11[i] * mr;
        pm[2 * i + 1] = g10[i] * ai + g11[i] * mi;
    }
}

void a_prop6_apply(cplx* v1, cplx* v2, cplx* v3, cplx* c1, cplx* c2, cplx* c3,
                   const double* e, std::size_t n) {
    cplx* f[6] = {v1, v2, v3, c1, c2, c3};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d re[6], im[6];
        for (int c = 0; c < 6; ++c) {
            auto* p = reinterpret_cast<const double*>(f[c] + i);
            deinterleave(_mm256_loadu_pd(p), _mm256_loadu_pd(p + 4), re[c], im[c]);
        }
        __m256d ore[6], oim[6];
        for (int r = 0; r < 3; ++r) {
            __m256d orr = _mm256_setzero_pd(), oi = _mm256_setzero_pd();
            for (int c = 0; c < 3; ++c) {
                __m256d e1 = _mm256_loadu_pd(e + (r * 6 + c) * n + i);
                __m256d e2 = _mm256_loadu_pd(e + (r * 6 + c + 3) * n + i);
                orr = _mm256_fmadd_pd(e1, re[c], orr);
                orr = _mm256_fnmadd_pd(e2, im[c + 3], orr);
                oi = _mm256_fmadd_pd(e1, im[c], oi);
                oi = _mm256_fmadd_pd(e2, re[c + 3], oi);
            }
            ore[r] = orr;
            oim[r] = oi;
        }
        for (int r = 3; r < 6; ++r) {
            __m256d orr = _mm256_setzero_pd(), oi = _mm256_setzero_pd();
            for (int c = 0; c < 3; ++c) {
                __m256d e1 = _mm256_loadu_pd(e + (r * 6 + c) * n + i);
                __m256d e2 = _mm256_loadu_pd(e + (r * 6 + c + 3) * n + i);
                orr = _mm256_fmadd_pd(e1, im[c], orr);
                orr = _mm256_fmadd_pd(e2, re[c + 3], orr);
                oi = _mm256_fnmadd_pd(e1, re[c], oi);
                oi = _mm256_fmadd_pd(e2, im[c + 3], oi);
            }
            ore[r] = orr;
            oim[r] = oi;
        }
        for (int r = 0; r < 6; ++r) {
            __m256d lo, hi;
            interleave(ore[r], oim[r], lo, hi);
            auto* p = reinterpret_cast<double*>(f[r] + i);
            _mm256_storeu_pd(p, lo);
            _mm256_storeu_pd(p + 4, hi);
        }
    }
    if (i < n) {
        // remainder via the scalar reference on the tail
        cplx* tail[6];
        for (int c = 0; c < 6; ++c) tail[c] = f[c] + i;
        const std::size_t rem = n - i;
        for (std::size_t k = 0; k < rem; ++k) {
            double tre[6], tim[6];
            for (int c = 0; c < 6; ++c) {
                tre[c] = tail[c][k].real();
                tim[c] = tail[c][k].imag();
            }
            for (int r = 0; r < 3; ++r) {
                double orr = 0.0, oi = 0.0;
                for (int c = 0; c < 3; ++c) {
                    const double e1 = e[(r * 6 + c) * n + i + k];
                    const double e2 = e[(r * 6 + c + 3) * n + i + k];
                    orr += e1 * tre[c] - e2 * tim[c + 3];
                    oi += e1 * tim[c] + e2 * tre[c + 3];
                }
                tail[r][k] = cplx(orr, oi);
            }
            for (int r = 3; r < 6; ++r) {
                double orr = 0.0, oi = 0.0;
                for (int c = 0; c < 3; ++c) {
                    const double e1 = e[(r * 6 + c) * n + i + k];
                    const double e2 = e[(r * 6 + c + 3) * n + i + k];
                    orr += e1 * tim[c] + e2 * tre[c + 3];
                    oi += -e1 * tre[c] + e2 * tim[c + 3];
                }
                tail[r][k] = cplx(orr, oi);
            }
        }
    }
}

} // namespace

const Ops* avx2_ops_or_null() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Ops t = {
        "avx2",
        a_mul, a_mul_add, a_mul_mul_sub, a_axpy,
        a_cscale_table, a_cscale_table_to, a_cmul_i_table, a_cmul_i_table_add,
        a_caxpy, a_cadd, a_csub,
        a_real_part, a_make_complex,
        a_sum_sq, a_max_abs, a_csum_sq, a_cmax_abs,
        a_green2_apply, a_prop6_apply,
    };
    return &t;
}

} // namespace mps::kernels

#else

namespace mps::kernels {
const Ops* avx2_ops_or_null() { return nullptr; }
} // namespace mps::kernels

#endif
