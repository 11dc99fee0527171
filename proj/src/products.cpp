#include "mps/products.hpp"

#include "mps/kernels.hpp"
#include "mps/operators.hpp"
#include "mps/transform.hpp"

#include <stdexcept>

namespace mps {

Workspace::RealLease Workspace::real() {
    if (!real_pool_.empty()) {
        auto v = std::move(real_pool_.back());
        real_pool_.pop_back();
        return RealLease(this, std::move(v));
    }
    return RealLease(this, std::make_unique<aligned_vector<double>>(grid_->size()));
}

aligned_vector<cplx>& Workspace::cplx_scratch(int slot) {
    while (cplx_scratch_.size() <= static_cast<std::size_t>(slot))
        cplx_scratch_.push_back(std::make_unique<aligned_vector<cplx>>(grid_->size()));
    return *cplx_scratch_[static_cast<std::size_t>(slot)];
}

void Workspace::to_physical(const SpectralField& f, double* out) {
    auto& in = cplx_scratch(0);
    auto& tmp = cplx_scratch(1);
    std::copy(f.data(), f.data() + f.size(), in.begin());
    transform::backward_c2c(*grid_, in.data(), tmp.data());
    kernels::ops().real_part(out, tmp.data(), f.size());
}

void Workspace::from_physical(const double* in, SpectralField& out) {
    auto& a = cplx_scratch(0);
    kernels::ops().make_complex(a.data(), in, grid_->size());
    transform::forward_c2c(*grid_, a.data(), out.data());
    zero_nyquist(out);
}

void Workspace::derivative_to_physical(const SpectralField& f, int axis, double* out) {
    auto& in = cplx_scratch(0);
    auto& tmp = cplx_scratch(1);
    const auto& t = grid_tables::xi(*grid_, axis);
    kernels::ops().cmul_i_table(in.data(), f.data(), t.data(), f.size());
    transform::backward_c2c(*grid_, in.data(), tmp.data());
    kernels::ops().real_part(out, tmp.data(), f.size());
}

SpectralField Workspace::dealiased_product(const SpectralField& a, const SpectralField& b) {
    a.check_same_grid(b);
    auto pa = real();
    auto pb = real();
    to_physical(a, pa.data());
    to_physical(b, pb.data());
    kernels::ops().mul(pa.data(), pa.data(), pb.data(), grid_->size());
    SpectralField out(grid_);
    from_physical(pa.data(), out);
    dealias(out);
    return out;
}

SpectralField reindex_to_grid(const SpectralField& src, const GridPtr& dst) {
    const WaveGrid& gs = src.grid();
    const WaveGrid& gd = *dst;
    SpectralField out(dst);
    for (int a = 0; a < 3; ++a)
        if (std::abs(gs.box(a) - gd.box(a)) > 1e-12 * gs.box(a))
            throw std::invalid_argument("reindex_to_grid: boxes differ");
    for (int i1 = 0; i1 < gs.dim(0); ++i1) {
        const int m1 = gs.mode(0, i1);
        if (std::abs(m1) >= gs.dim(0) / 2 || std::abs(m1) >= gd.dim(0) / 2) continue;
        for (int i2 = 0; i2 < gs.dim(1); ++i2) {
            const int m2 = gs.mode(1, i2);
            if (std::abs(m2) >= gs.dim(1) / 2 || std::abs(m2) >= gd.dim(1) / 2) continue;
            for (int i3 = 0; i3 < gs.dim(2); ++i3) {
                const int m3 = gs.mode(2, i3);
                if (std::abs(m3) >= gs.dim(2) / 2 || std::abs(m3) >= gd.dim(2) / 2) continue;
                out.mode(m1, m2, m3) = src.mode(m1, m2, m3);
            }
        }
    }
    return out;
}

SpectralField exact_product(const SpectralField& a, const SpectralField& b) {
    a.check_same_grid(b);
    const WaveGrid& g = a.grid();
    GridPtr padded = make_grid(2 * g.dim(0), 2 * g.dim(1), 2 * g.dim(2),
                               g.box(0), g.box(1), g.box(2));
    SpectralField pa = reindex_to_grid(a, padded);
    SpectralField pb = reindex_to_grid(b, padded);
    Workspace ws(padded);
    auto ra = ws.real();
    auto rb = ws.real();
    ws.to_physical(pa, ra.data());
    ws.to_physical(pb, rb.data());
    kernels::ops().mul(ra.data(), ra.data(), rb.data(), padded->size());
    SpectralField prod(padded);
    ws.from_physical(ra.data(), prod);
    return reindex_to_grid(prod, a.grid_ptr());
}

} // namespace mps
