#pragma once
// Complex Fourier coefficients of real scalar / 3-vector fields.
// Fields representing real functions satisfy coeff(-xi) = conj(coeff(xi));
// Nyquist rows are kept identically zero.

#include "mps/kernels.hpp"
#include "mps/wave_grid.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>

namespace mps {

using cplx = std::complex<double>;

class SpectralField {
public:
    explicit SpectralField(GridPtr grid)
        : grid_(std::move(grid)), coeff_(grid_->size(), cplx(0.0, 0.0)) {}

    const WaveGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::size_t size() const { return coeff_.size(); }

    cplx* data() { return coeff_.data(); }
    const cplx* data() const { return coeff_.data(); }

    cplx& at(int i1, int i2, int i3) { return coeff_[grid_->index(i1, i2, i3)]; }
    const cplx& at(int i1, int i2, int i3) const { return coeff_[grid_->index(i1, i2, i3)]; }

    // coefficient of integer mode (n1,n2,n3)
    cplx& mode(int m1, int m2, int m3) {
        return coeff_[grid_->index(grid_->index_of_mode(0, m1), grid_->index_of_mode(1, m2),
                                   grid_->index_of_mode(2, m3))];
    }
    const cplx& mode(int m1, int m2, int m3) const {
        return coeff_[grid_->index(grid_->index_of_mode(0, m1), grid_->index_of_mode(1, m2),
                                   grid_->index_of_mode(2, m3))];
    }

    void set_zero() { std::fill(coeff_.begin(), coeff_.end(), cplx(0.0, 0.0)); }

    SpectralField& operator+=(const SpectralField& o) {
        check_same_grid(o);
        kernels::ops().cadd(data(), data(), o.data(), size());
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        check_same_grid(o);
        kernels::ops().csub(data(), data(), o.data(), size());
        return *this;
    }
    SpectralField& operator*=(double a) {
        auto* d = reinterpret_cast<double*>(data());
        for (std::size_t i = 0; i < 2 * size(); ++i) d[i] *= a;
        return *this;
    }
    void axpy(double a, const SpectralField& x) {
        check_same_grid(x);
        kernels::ops().caxpy(data(), a, x.data(), size());
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    void check_same_grid(const SpectralField& o) const {
        if (grid_.get() != o.grid_.get()) throw std::invalid_argument("fields on different grids");
    }

private:
    GridPtr grid_;
    aligned_vector<cplx> coeff_;
};

class VectorSpectralField {
public:
    explicit VectorSpectralField(GridPtr grid)
        : comp_{SpectralField(grid), SpectralField(grid), SpectralField(std::move(grid))} {}

    const WaveGrid& grid() const { return comp_[0].grid(); }
    const GridPtr& grid_ptr() const { return comp_[0].grid_ptr(); }

    SpectralField& operator[](int i) { return comp_[static_cast<std::size_t>(i)]; }
    const SpectralField& operator[](int i) const { return comp_[static_cast<std::size_t>(i)]; }

    void set_zero() {
        for (auto& c : comp_) c.set_zero();
    }

    VectorSpectralField& operator+=(const VectorSpectralField& o) {
        for (int i = 0; i < 3; ++i) comp_[static_cast<std::size_t>(i)] += o[i];
        return *this;
    }
    VectorSpectralField& operator-=(const VectorSpectralField& o) {
        for (int i = 0; i < 3; ++i) comp_[static_cast<std::size_t>(i)] -= o[i];
        return *this;
    }
    VectorSpectralField& operator*=(double a) {
        for (auto& c : comp_) c *= a;
        return *this;
    }
    void axpy(double a, const VectorSpectralField& x) {
        for (int i = 0; i < 3; ++i) comp_[static_cast<std::size_t>(i)].axpy(a, x[i]);
    }

    friend VectorSpectralField operator-(VectorSpectralField a, const VectorSpectralField& b) {
        return a -= b;
    }

private:
    std::array<SpectralField, 3> comp_;
};

// max |coeff(xi) - conj(coeff(-xi))| over paired modes (reality check)
double hermitian_symmetry_error(const SpectralField& f);

// zero every Nyquist row (n_k = -N_k/2 on any axis)
void zero_nyquist(SpectralField& f);

// subtract the mean (zero mode)
void zero_mean(SpectralField& f);

// enforce coeff(-xi) = conj(coeff(xi)) by averaging paired modes
void enforce_hermitian(SpectralField& f);

} // namespace mps
