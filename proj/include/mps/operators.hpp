#pragma once
// Spectral differential operators, Leray projection, dealiasing.
// Axis arguments are 1-based (1|2|3) matching the coordinate names x1,x2,x3.

#include "mps/spectral_field.hpp"

namespace mps {

// full-grid multiplier tables, cached per grid geometry
namespace grid_tables {
const aligned_vector<double>& xi(const WaveGrid& g, int axis1based);
const aligned_vector<double>& ksq(const WaveGrid& g);
const aligned_vector<double>& dealias_mask(const WaveGrid& g); // 1 keep, 0 zero
} // namespace grid_tables

void derivative_to(SpectralField& out, const SpectralField& f, int axis);
SpectralField derivative(const SpectralField& f, int axis);
// out += d_axis f
void derivative_add(SpectralField& out, const SpectralField& f, int axis);

SpectralField laplacian(const SpectralField& f);
VectorSpectralField grad(const SpectralField& f);
SpectralField divergence(const VectorSpectralField& f);
VectorSpectralField curl(const VectorSpectralField& f);

// fhat(xi) -> fhat - xi (xi.fhat)/|xi|^2  (zero mode untouched); idempotent
void leray_project(VectorSpectralField& f);

// max_xi |xi . fhat(xi)| (spectral divergence residual)
double divergence_max(const VectorSpectralField& f);

// zero all modes with |n_i| > N_i/3 on any axis
void dealias(SpectralField& f);
void dealias(VectorSpectralField& f);

} // namespace mps
