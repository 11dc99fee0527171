#pragma once
// Data-parallel inner-loop kernels.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The active backend is selected once at startup from
// CPUID, overridable with MPS_SIMD=scalar|avx2|auto. Backends are
// equivalence-tested against each other in tests/test_kernels.cpp.

#include <complex>
#include <cstddef>

namespace mps::kernels {

using cplx = std::complex<double>;

struct Ops {
    const char* name;

    // real pointwise
    void (*mul)(double* out, const double* a, const double* b, std::size_t n);
    void (*mul_add)(double* out, const double* a, const double* b, std::size_t n);
    // out[i] = a[i]*b[i] - c[i]*d[i]  (cross products, cancellation forms)
    void (*mul_mul_sub)(double* out, const double* a, const double* b,
                        const double* c, const double* d, std::size_t n);
    void (*axpy)(double* y, double alpha, const double* x, std::size_t n);

    // complex pointwise with real multiplier tables
    void (*cscale_table)(cplx* f, const double* t, std::size_t n);
    void (*cscale_table_to)(cplx* out, const cplx* in, const double* t, std::size_t n);
    // out[i] = i * t[i] * in[i]   (spectral derivative)
    void (*cmul_i_table)(cplx* out, const cplx* in, const double* t, std::size_t n);
    void (*cmul_i_table_add)(cplx* out, const cplx* in, const double* t, std::size_t n);
    void (*caxpy)(cplx* y, double alpha, const cplx* x, std::size_t n);
    void (*cadd)(cplx* out, const cplx* a, const cplx* b, std::size_t n);
    void (*csub)(cplx* out, const cplx* a, const cplx* b, std::size_t n);

    // layout conversions
    void (*real_part)(double* out, const cplx* in, std::size_t n);
    void (*make_complex)(cplx* out, const double* in, std::size_t n);

    // reductions
    double (*sum_sq)(const double* x, std::size_t n);
    double (*max_abs)(const double* x, std::size_t n);
    double (*csum_sq)(const cplx* z, std::size_t n);
    double (*cmax_abs)(const cplx* z, std::size_t n);

    // per-mode 2x2 real matrix applied to a complex pair:
    //   (a, m) <- (g00*a + g01*m, g10*a + g11*m)
    void (*green2_apply)(cplx* a, cplx* m, const double* g00, const double* g01,
                         const double* g10, const double* g11, std::size_t n);

    // per-mode 6x6 propagator in the real representation E (see solver.cpp).
    // E is stored as 36 planes of n doubles: plane (r*6+c) at e + (r*6+c)*n.
    // Acting on the complex 6-vector (v1,v2,v3,c1,c2,c3):
    //   v_out = E11*v + i*E12*c,   c_out = -i*E21*v + E22*c
    void (*prop6_apply)(cplx* v1, cplx* v2, cplx* v3, cplx* c1, cplx* c2, cplx* c3,
                        const double* e, std::size_t n);
};

// Active backend (selected once, thread-safe).
const Ops& ops();

// Individual backends, for equivalence tests.
const Ops& scalar_ops();
const Ops* avx2_ops_or_null();

} // namespace mps::kernels
