#pragma once
// Dyadic frequency decomposition, homogeneous Besov norms and the Bony
// paraproduct split as grid operators.
//
// The radial profile is phi(xi) = chi(xi/2) - chi(xi) with chi a smooth
// radial cutoff equal to 1 for |xi| <= (3/4)*sqrt(4/3) and 0 for
// |xi| >= 4/3, so supp phi is inside {3/4 <= |xi| <= 8/3} and
// sum_j phi(2^-j xi) telescopes to 1 on every nonzero grid mode.
// Homogeneous norms ignore the xi = 0 mode throughout.

#include "mps/spectral_field.hpp"

#include <string>
#include <vector>

namespace mps {

struct BesovSpec {
    double s;
    double p; // [1, inf]
    double r; // [1, inf]

    std::string to_string() const; // "B[s,p,r]" with "inf" for infinity
};

class DyadicPartition {
public:
    // throws if the grid resolves fewer than 4 octaves
    static DyadicPartition make(GridPtr grid);

    const WaveGrid& grid() const { return *grid_; }
    int j_min() const { return jmin_; }
    int j_max() const { return jmax_; }

    static double chi_radial(double r);             // lowpass profile
    static double phi_radial(double r);             // chi(r/2) - chi(r)
    double phi(int j, double r) const;              // phi(2^-j r)

    const aligned_vector<double>& block_table(int j) const;
    bool block_nonempty(int j) const;

    // Delta_j f (j outside [j_min, j_max] -> zero field)
    SpectralField block(const SpectralField& f, int j) const;
    // S_j f = sum_{k <= j-1} Delta_k f, realized as chi(2^-j xi) with the
    // zero mode removed
    SpectralField lowpass(const SpectralField& f, int j) const;

private:
    explicit DyadicPartition(GridPtr grid) : grid_(std::move(grid)) {}

    GridPtr grid_;
    int jmin_ = 0, jmax_ = 0;
    std::vector<aligned_vector<double>> tables_;
    std::vector<char> nonempty_;
};

double besov_norm(const SpectralField& f, const BesovSpec& spec, const DyadicPartition& part);
double besov_norm(const VectorSpectralField& f, const BesovSpec& spec, const DyadicPartition& part);

struct BonyParts {
    SpectralField Tuv; // sum_j S_{j-1}u Delta_j v
    SpectralField Tvu;
    SpectralField R; // sum_j Delta_j u (sum_{|j'-j|<=1} Delta_j' v)
};

// requires both inputs zero-mean and band-limited to |n_i| <= N_i/4 so all
// products are exact after padding
BonyParts bony_decompose(const SpectralField& u, const SpectralField& v,
                         const DyadicPartition& part);

} // namespace mps
