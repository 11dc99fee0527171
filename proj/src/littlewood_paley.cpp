#include "mps/littlewood_paley.hpp"

#include "mps/kernels.hpp"
#include "mps/norms.hpp"
#include "mps/operators.hpp"
#include "mps/products.hpp"
#include "mps/smoothstep.hpp"
#include "mps/transform.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mps {

namespace {

std::string exp_to_string(double v) {
    if (v == inf) return "inf";
    char buf[32];
    if (v == static_cast<double>(static_cast<long long>(v)))
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    else
        std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

constexpr double chi_plateau = 0.86602540378443864676; // (3/4)*sqrt(4/3)
constexpr double chi_zero = 4.0 / 3.0;

} // namespace

std::string BesovSpec::to_string() const {
    return "B[" + exp_to_string(s) + "," + exp_to_string(p) + "," + exp_to_string(r) + "]";
}

double DyadicPartition::chi_radial(double r) { return radial_cutoff(r, chi_plateau, chi_zero); }

double DyadicPartition::phi_radial(double r) { return chi_radial(r / 2.0) - chi_radial(r); }

double DyadicPartition::phi(int j, double r) const { return phi_radial(std::ldexp(r, -j)); }

DyadicPartition DyadicPartition::make(GridPtr grid) {
    DyadicPartition part(std::move(grid));
    const WaveGrid& g = *part.grid_;

    double xi_min = inf, xi_max_sq = 0.0;
    for (int a = 0; a < 3; ++a) xi_min = std::min(xi_min, WaveGrid::two_pi() / g.box(a));
    for (int a = 0; a < 3; ++a) {
        const double m = WaveGrid::two_pi() * (g.dim(a) / 2 - 1) / g.box(a);
        xi_max_sq += m * m;
    }
    const double xi_max = std::sqrt(xi_max_sq);
    if (xi_max < 16.0 * xi_min)
        throw std::invalid_argument("DyadicPartition: grid resolves fewer than 4 octaves");

    part.jmin_ = static_cast<int>(std::floor(std::log2(xi_min))) - 1;
    part.jmax_ = static_cast<int>(std::ceil(std::log2(xi_max))) + 1;

    const auto& ksq = grid_tables::ksq(g);
    const std::size_t n = g.size();
    part.tables_.resize(static_cast<std::size_t>(part.jmax_ - part.jmin_ + 1));
    part.nonempty_.resize(part.tables_.size(), 0);
    for (int j = part.jmin_; j <= part.jmax_; ++j) {
        auto& t = part.tables_[static_cast<std::size_t>(j - part.jmin_)];
        t.resize(n);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = part.phi(j, std::sqrt(ksq[i]));
            t[i] = v;
            any = any || v != 0.0;
        }
        part.nonempty_[static_cast<std::size_t>(j - part.jmin_)] = any ? 1 : 0;
    }
    return part;
}

const aligned_vector<double>& DyadicPartition::block_table(int j) const {
    if (j < jmin_ || j > jmax_) throw std::out_of_range("block index outside partition range");
    return tables_[static_cast<std::size_t>(j - jmin_)];
}

bool DyadicPartition::block_nonempty(int j) const {
    if (j < jmin_ || j > jmax_) return false;
    return nonempty_[static_cast<std::size_t>(j - jmin_)] != 0;
}

SpectralField DyadicPartition::block(const SpectralField& f, int j) const {
    if (f.grid_ptr().get() != grid_.get()) throw std::invalid_argument("field on different grid");
    SpectralField out(grid_);
    if (j < jmin_ || j > jmax_) return out;
    kernels::ops().cscale_table_to(out.data(), f.data(), block_table(j).data(), f.size());
    return out;
}

SpectralField DyadicPartition::lowpass(const SpectralField& f, int j) const {
    if (f.grid_ptr().get() != grid_.get()) throw std::invalid_argument("field on different grid");
    SpectralField out(grid_);
    const auto& ksq = grid_tables::ksq(*grid_);
    const cplx* in = f.data();
    cplx* o = out.data();
    for (std::size_t i = 0; i < f.size(); ++i)
        o[i] = in[i] * chi_radial(std::ldexp(std::sqrt(ksq[i]), -j));
    zero_mean(out);
    return out;
}

namespace {

double block_lp(const SpectralField& blk, double p) {
    if (kernels::ops().csum_sq(blk.data(), blk.size()) == 0.0) return 0.0;
    return lp_norm_physical(blk, p);
}

double block_lp(const DyadicPartition& part, const VectorSpectralField& f, int j, double p) {
    VectorSpectralField blk(f.grid_ptr());
    bool any = false;
    for (int c = 0; c < 3; ++c) {
        blk[c] = part.block(f[c], j);
        any = any || kernels::ops().csum_sq(blk[c].data(), blk[c].size()) != 0.0;
    }
    if (!any) return 0.0;
    return lp_norm_physical(blk, p);
}

double accumulate_besov(const BesovSpec& spec, const std::vector<std::pair<int, double>>& jnorms) {
    if (spec.r == inf) {
        double m = 0.0;
        for (const auto& [j, v] : jnorms) m = std::max(m, std::exp2(j * spec.s) * v);
        return m;
    }
    double s = 0.0;
    for (const auto& [j, v] : jnorms) s += std::pow(std::exp2(j * spec.s) * v, spec.r);
    return std::pow(s, 1.0 / spec.r);
}

void check_spec(const BesovSpec& spec) {
    if (!(spec.p >= 1.0) || !(spec.r >= 1.0))
        throw std::invalid_argument("BesovSpec: p and r must be in [1, inf]");
}

} // namespace

double besov_norm(const SpectralField& f, const BesovSpec& spec, const DyadicPartition& part) {
    check_spec(spec);
    std::vector<std::pair<int, double>> jnorms;
    for (int j = part.j_min(); j <= part.j_max(); ++j) {
        if (!part.block_nonempty(j)) continue;
        const double v = block_lp(part.block(f, j), spec.p);
        if (v != 0.0) jnorms.emplace_back(j, v);
    }
    return accumulate_besov(spec, jnorms);
}

double besov_norm(const VectorSpectralField& f, const BesovSpec& spec,
                  const DyadicPartition& part) {
    check_spec(spec);
    std::vector<std::pair<int, double>> jnorms;
    for (int j = part.j_min(); j <= part.j_max(); ++j) {
        if (!part.block_nonempty(j)) continue;
        const double v = block_lp(part, f, j, spec.p);
        if (v != 0.0) jnorms.emplace_back(j, v);
    }
    return accumulate_besov(spec, jnorms);
}

BonyParts bony_decompose(const SpectralField& u, const SpectralField& v,
                         const DyadicPartition& part) {
    u.check_same_grid(v);
    const WaveGrid& g = u.grid();
    for (const SpectralField* f : {&u, &v}) {
        if (std::abs((*f).mode(0, 0, 0)) > 1e-14)
            throw std::invalid_argument("bony_decompose: inputs must be zero-mean");
        for (int i1 = 0; i1 < g.dim(0); ++i1)
            for (int i2 = 0; i2 < g.dim(1); ++i2)
                for (int i3 = 0; i3 < g.dim(2); ++i3) {
                    if (std::abs(f->at(i1, i2, i3)) == 0.0) continue;
                    if (std::abs(g.mode(0, i1)) > g.dim(0) / 4 ||
                        std::abs(g.mode(1, i2)) > g.dim(1) / 4 ||
                        std::abs(g.mode(2, i3)) > g.dim(2) / 4)
                        throw std::invalid_argument(
                            "bony_decompose: inputs too wide-band for exact products");
                }
    }

    BonyParts parts{SpectralField(u.grid_ptr()), SpectralField(u.grid_ptr()),
                    SpectralField(u.grid_ptr())};

    for (int j = part.j_min(); j <= part.j_max(); ++j) {
        if (part.block_nonempty(j)) {
            const SpectralField dv = part.block(v, j);
            if (kernels::ops().csum_sq(dv.data(), dv.size()) != 0.0)
                parts.Tuv += exact_product(part.lowpass(u, j - 1), dv);
            const SpectralField du = part.block(u, j);
            if (kernels::ops().csum_sq(du.data(), du.size()) != 0.0) {
                parts.Tvu += exact_product(part.lowpass(v, j - 1), du);
                SpectralField tilde(u.grid_ptr());
                for (int jp = j - 1; jp <= j + 1; ++jp) tilde += part.block(v, jp);
                if (kernels::ops().csum_sq(tilde.data(), tilde.size()) != 0.0)
                    parts.R += exact_product(du, tilde);
            }
        }
    }
    return parts;
}

} // namespace mps
