#pragma once
// FFT backend. Convention: f(x) = sum_xi fhat(xi) e^{i xi.x}, so synthesis
// (spectral -> physical) is an unnormalized inverse DFT and analysis divides
// by N1*N2*N3. Plans are cached per grid dims, created with FFTW_ESTIMATE
// (deterministic plan choice), and shared read-only.

#include "mps/spectral_field.hpp"
#include "mps/wave_grid.hpp"

namespace mps::transform {

// raw cached-plan execution on 64-byte aligned buffers
void forward_c2c(const WaveGrid& g, cplx* in, cplx* out);  // includes 1/Ntot
void backward_c2c(const WaveGrid& g, cplx* in, cplx* out); // unnormalized

// physical samples are real arrays, row-major (i1 slow, i3 fast)
SpectralField forward_transform(const GridPtr& grid, const double* samples, std::size_t n);
SpectralField forward_transform(const GridPtr& grid, const aligned_vector<double>& samples);
aligned_vector<double> to_physical(const SpectralField& f);

} // namespace mps::transform
