#pragma once
// Physical-space product machinery: a scratch-buffer workspace around the
// cached FFT plans, the 2/3-rule dealiased product used by the solver, and
// the exact (zero-padded, double-size grid) product used by the Bony
// decomposition and by oracles.

#include "mps/spectral_field.hpp"

#include <memory>
#include <vector>

namespace mps {

class Workspace {
public:
    explicit Workspace(GridPtr grid) : grid_(std::move(grid)) {}

    const WaveGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }

    class RealLease {
    public:
        RealLease(Workspace* ws, std::unique_ptr<aligned_vector<double>> v)
            : ws_(ws), v_(std::move(v)) {}
        ~RealLease() {
            if (v_) ws_->release(std::move(v_));
        }
        RealLease(RealLease&&) = default;
        RealLease(const RealLease&) = delete;
        double* data() { return v_->data(); }
        const double* data() const { return v_->data(); }
        aligned_vector<double>& vec() { return *v_; }

    private:
        Workspace* ws_;
        std::unique_ptr<aligned_vector<double>> v_;
    };

    RealLease real();

    // spectral -> physical samples (real part of inverse DFT)
    void to_physical(const SpectralField& f, double* out);
    // physical -> coefficients
    void from_physical(const double* in, SpectralField& out);
    // ifft of i*xi_axis*fhat (derivative straight to physical samples)
    void derivative_to_physical(const SpectralField& f, int axis, double* out);

    // 2/3-rule product: ifft both, multiply, fft, mask
    SpectralField dealiased_product(const SpectralField& a, const SpectralField& b);

private:
    friend class RealLease;
    void release(std::unique_ptr<aligned_vector<double>> v) { real_pool_.push_back(std::move(v)); }
    aligned_vector<cplx>& cplx_scratch(int slot);

    GridPtr grid_;
    std::vector<std::unique_ptr<aligned_vector<double>>> real_pool_;
    std::vector<std::unique_ptr<aligned_vector<cplx>>> cplx_scratch_;
};

// copy coefficients by integer mode onto another grid with the same box
// (source modes that do not fit are dropped; Nyquist rows stay zero)
SpectralField reindex_to_grid(const SpectralField& src, const GridPtr& dst);

// alias-free product via a doubled grid; exact when the combined bandwidth
// of a and b fits the original grid
SpectralField exact_product(const SpectralField& a, const SpectralField& b);

} // namespace mps
