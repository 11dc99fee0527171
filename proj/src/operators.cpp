#include "mps/operators.hpp"

#include "mps/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace mps {

namespace grid_tables {
namespace {

struct Tables {
    aligned_vector<double> xi[3];
    aligned_vector<double> ksq;
    aligned_vector<double> dealias;
};

using Key = std::tuple<int, int, int, double, double, double>;

std::mutex table_mutex;

Tables& tables_for(const WaveGrid& g) {
    static std::map<Key, Tables> cache;
    std::lock_guard<std::mutex> lock(table_mutex);
    Key key{g.dim(0), g.dim(1), g.dim(2), g.box(0), g.box(1), g.box(2)};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Tables& t = cache[key];
    const std::size_t n = g.size();
    for (int a = 0; a < 3; ++a) t.xi[a].resize(n);
    t.ksq.resize(n);
    t.dealias.resize(n);
    const int lim1 = g.dealias_limit(0), lim2 = g.dealias_limit(1), lim3 = g.dealias_limit(2);
    std::size_t idx = 0;
    for (int i1 = 0; i1 < g.dim(0); ++i1) {
        const double x1 = g.xi(0, i1);
        const int m1 = std::abs(g.mode(0, i1));
        for (int i2 = 0; i2 < g.dim(1); ++i2) {
            const double x2 = g.xi(1, i2);
            const int m2 = std::abs(g.mode(1, i2));
            for (int i3 = 0; i3 < g.dim(2); ++i3, ++idx) {
                const double x3 = g.xi(2, i3);
                t.xi[0][idx] = x1;
                t.xi[1][idx] = x2;
                t.xi[2][idx] = x3;
                t.ksq[idx] = x1 * x1 + x2 * x2 + x3 * x3;
                const int m3 = std::abs(g.mode(2, i3));
                t.dealias[idx] = (m1 > lim1 || m2 > lim2 || m3 > lim3) ? 0.0 : 1.0;
            }
        }
    }
    return t;
}

} // namespace

const aligned_vector<double>& xi(const WaveGrid& g, int axis1based) {
    if (axis1based < 1 || axis1based > 3) throw std::invalid_argument("axis must be 1..3");
    return tables_for(g).xi[axis1based - 1];
}
const aligned_vector<double>& ksq(const WaveGrid& g) { return tables_for(g).ksq; }
const aligned_vector<double>& dealias_mask(const WaveGrid& g) { return tables_for(g).dealias; }

} // namespace grid_tables

void derivative_to(SpectralField& out, const SpectralField& f, int axis) {
    out.check_same_grid(f);
    const auto& t = grid_tables::xi(f.grid(), axis);
    kernels::ops().cmul_i_table(out.data(), f.data(), t.data(), f.size());
}

SpectralField derivative(const SpectralField& f, int axis) {
    SpectralField out(f.grid_ptr());
    derivative_to(out, f, axis);
    return out;
}

void derivative_add(SpectralField& out, const SpectralField& f, int axis) {
    out.check_same_grid(f);
    const auto& t = grid_tables::xi(f.grid(), axis);
    kernels::ops().cmul_i_table_add(out.data(), f.data(), t.data(), f.size());
}

SpectralField laplacian(const SpectralField& f) {
    SpectralField out(f.grid_ptr());
    const auto& k = grid_tables::ksq(f.grid());
    kernels::ops().cscale_table_to(out.data(), f.data(), k.data(), f.size());
    out *= -1.0;
    return out;
}

VectorSpectralField grad(const SpectralField& f) {
    VectorSpectralField g(f.grid_ptr());
    for (int a = 1; a <= 3; ++a) derivative_to(g[a - 1], f, a);
    return g;
}

SpectralField divergence(const VectorSpectralField& f) {
    SpectralField d(f.grid_ptr());
    derivative_to(d, f[0], 1);
    derivative_add(d, f[1], 2);
    derivative_add(d, f[2], 3);
    return d;
}

VectorSpectralField curl(const VectorSpectralField& f) {
    VectorSpectralField c(f.grid_ptr());
    // c1 = d2 f3 - d3 f2, c2 = d3 f1 - d1 f3, c3 = d1 f2 - d2 f1
    SpectralField tmp(f.grid_ptr());
    derivative_to(c[0], f[2], 2);
    derivative_to(tmp, f[1], 3);
    c[0] -= tmp;
    derivative_to(c[1], f[0], 3);
    derivative_to(tmp, f[2], 1);
    c[1] -= tmp;
    derivative_to(c[2], f[1], 1);
    derivative_to(tmp, f[0], 2);
    c[2] -= tmp;
    return c;
}

void leray_project(VectorSpectralField& f) {
    const WaveGrid& g = f.grid();
    cplx* f1 = f[0].data();
    cplx* f2 = f[1].data();
    cplx* f3 = f[2].data();
    std::size_t idx = 0;
    for (int i1 = 0; i1 < g.dim(0); ++i1) {
        const double x1 = g.xi(0, i1);
        for (int i2 = 0; i2 < g.dim(1); ++i2) {
            const double x2 = g.xi(1, i2);
            for (int i3 = 0; i3 < g.dim(2); ++i3, ++idx) {
                const double x3 = g.xi(2, i3);
                const double k2 = x1 * x1 + x2 * x2 + x3 * x3;
                if (k2 == 0.0) continue;
                const cplx dot = (x1 * f1[idx] + x2 * f2[idx] + x3 * f3[idx]) / k2;
                f1[idx] -= x1 * dot;
                f2[idx] -= x2 * dot;
                f3[idx] -= x3 * dot;
            }
        }
    }
}

double divergence_max(const VectorSpectralField& f) {
    const WaveGrid& g = f.grid();
    const cplx* f1 = f[0].data();
    const cplx* f2 = f[1].data();
    const cplx* f3 = f[2].data();
    double m = 0.0;
    std::size_t idx = 0;
    for (int i1 = 0; i1 < g.dim(0); ++i1) {
        const double x1 = g.xi(0, i1);
        for (int i2 = 0; i2 < g.dim(1); ++i2) {
            const double x2 = g.xi(1, i2);
            for (int i3 = 0; i3 < g.dim(2); ++i3, ++idx) {
                const double x3 = g.xi(2, i3);
                m = std::max(m, std::abs(x1 * f1[idx] + x2 * f2[idx] + x3 * f3[idx]));
            }
        }
    }
    return m;
}

void dealias(SpectralField& f) {
    const auto& mask = grid_tables::dealias_mask(f.grid());
    kernels::ops().cscale_table(f.data(), mask.data(), f.size());
}

void dealias(VectorSpectralField& f) {
    for (int i = 0; i < 3; ++i) dealias(f[i]);
}

// --- field helpers declared in spectral_field.hpp ---

namespace {
// storage index of the conjugate partner mode; Nyquist rows map to themselves
int conj_index(const WaveGrid& g, int axis, int i) {
    const int m = g.mode(axis, i);
    return m == -g.dim(axis) / 2 ? i : g.index_of_mode(axis, -m);
}
} // namespace

double hermitian_symmetry_error(const SpectralField& f) {
    const WaveGrid& g = f.grid();
    double m = 0.0;
    for (int i1 = 0; i1 < g.dim(0); ++i1) {
        const int j1 = conj_index(g, 0, i1);
        for (int i2 = 0; i2 < g.dim(1); ++i2) {
            const int j2 = conj_index(g, 1, i2);
            for (int i3 = 0; i3 < g.dim(2); ++i3) {
                const int j3 = conj_index(g, 2, i3);
                m = std::max(m, std::abs(f.at(i1, i2, i3) - std::conj(f.at(j1, j2, j3))));
            }
        }
    }
    return m;
}

void zero_nyquist(SpectralField& f) {
    const WaveGrid& g = f.grid();
    const int h1 = g.dim(0) / 2, h2 = g.dim(1) / 2, h3 = g.dim(2) / 2;
    for (int i2 = 0; i2 < g.dim(1); ++i2)
        for (int i3 = 0; i3 < g.dim(2); ++i3) f.at(h1, i2, i3) = 0.0;
    for (int i1 = 0; i1 < g.dim(0); ++i1)
        for (int i3 = 0; i3 < g.dim(2); ++i3) f.at(i1, h2, i3) = 0.0;
    for (int i1 = 0; i1 < g.dim(0); ++i1)
        for (int i2 = 0; i2 < g.dim(1); ++i2) f.at(i1, i2, h3) = 0.0;
}

void zero_mean(SpectralField& f) { f.at(0, 0, 0) = 0.0; }

void enforce_hermitian(SpectralField& f) {
    const WaveGrid& g = f.grid();
    zero_nyquist(f);
    for (int i1 = 0; i1 < g.dim(0); ++i1) {
        if (i1 == g.dim(0) / 2) continue;
        const int j1 = g.index_of_mode(0, -g.mode(0, i1));
        for (int i2 = 0; i2 < g.dim(1); ++i2) {
            if (i2 == g.dim(1) / 2) continue;
            const int j2 = g.index_of_mode(1, -g.mode(1, i2));
            for (int i3 = 0; i3 < g.dim(2); ++i3) {
                if (i3 == g.dim(2) / 2) continue;
                const int j3 = g.index_of_mode(2, -g.mode(2, i3));
                const std::size_t ia = g.index(i1, i2, i3);
                const std::size_t ib = g.index(j1, j2, j3);
                if (ib < ia) continue;
                const cplx avg = 0.5 * (f.data()[ia] + std::conj(f.data()[ib]));
                f.data()[ia] = avg;
                f.data()[ib] = std::conj(avg);
            }
        }
    }
}

} // namespace mps
