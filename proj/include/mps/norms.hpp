#pragma once
// Physical L^p norms (uniform-grid quadrature) and Fourier-side L^q norms
// of the continuous-transform values ahat_cont(xi) = coeff(xi) * V/(2pi)^3.
// p = q = infinity is a max. Vector fields use the pointwise Euclidean
// magnitude.

#include "mps/spectral_field.hpp"

#include <limits>

namespace mps {

inline constexpr double inf = std::numeric_limits<double>::infinity();

double lp_norm_physical(const SpectralField& f, double p);
double lp_norm_physical(const VectorSpectralField& f, double p);
double lq_norm_fourier(const SpectralField& f, double q);

// norm of already-sampled physical values with the grid's quadrature weight
double lp_norm_samples(const WaveGrid& g, const double* v, std::size_t n, double p);

// discrete physical inner product <f,g> = V * sum Re(fhat conj(ghat))
double inner_product(const SpectralField& f, const SpectralField& g);

// ||f||_{L^2}^2 via coefficients (Parseval): V * sum |fhat|^2
double l2_sq_parseval(const SpectralField& f);
double l2_sq_parseval(const VectorSpectralField& f);

} // namespace mps
