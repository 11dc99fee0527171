#include "mps/transform.hpp"

#include "mps/kernels.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace mps::transform {

namespace {

struct Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::size_t ntot = 0;

    ~Plans() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

std::mutex plan_mutex;

const Plans& plans_for(const WaveGrid& g) {
    static std::map<std::tuple<int, int, int>, Plans> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(g.dim(0), g.dim(1), g.dim(2));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Plans& p = cache[key];
    p.ntot = g.size();
    aligned_vector<cplx> a(p.ntot), b(p.ntot);
    auto* fa = reinterpret_cast<fftw_complex*>(a.data());
    auto* fb = reinterpret_cast<fftw_complex*>(b.data());
    p.fwd = fftw_plan_dft_3d(g.dim(0), g.dim(1), g.dim(2), fa, fb, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_3d(g.dim(0), g.dim(1), g.dim(2), fa, fb, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!p.fwd || !p.bwd) throw std::runtime_error("fftw plan creation failed");
    return p;
}

} // namespace

void forward_c2c(const WaveGrid& g, cplx* in, cplx* out) {
    const Plans& p = plans_for(g);
    fftw_execute_dft(p.fwd, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
    const double s = 1.0 / static_cast<double>(p.ntot);
    auto* d = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < 2 * p.ntot; ++i) d[i] *= s;
}

void backward_c2c(const WaveGrid& g, cplx* in, cplx* out) {
    const Plans& p = plans_for(g);
    fftw_execute_dft(p.bwd, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
}

SpectralField forward_transform(const GridPtr& grid, const double* samples, std::size_t n) {
    if (n != grid->size()) throw std::invalid_argument("forward_transform: sample count mismatch");
    SpectralField f(grid);
    aligned_vector<cplx> in(n);
    kernels::ops().make_complex(in.data(), samples, n);
    forward_c2c(*grid, in.data(), f.data());
    zero_nyquist(f);
    return f;
}

SpectralField forward_transform(const GridPtr& grid, const aligned_vector<double>& samples) {
    return forward_transform(grid, samples.data(), samples.size());
}

aligned_vector<double> to_physical(const SpectralField& f) {
    const std::size_t n = f.size();
    aligned_vector<cplx> in(f.data(), f.data() + n), out(n);
    backward_c2c(f.grid(), in.data(), out.data());
    aligned_vector<double> r(n);
    kernels::ops().real_part(r.data(), out.data(), n);
    return r;
}

} // namespace mps::transform
