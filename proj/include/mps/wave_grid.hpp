#pragma once
// Discrete Fourier representation of an anisotropic periodic box.
//
// Storage is row-major (i1 slow, i3 fast) in FFT index order: along each
// axis, index i in [0,N) carries integer mode n = i for i < N/2 and
// n = i - N for i >= N/2, i.e. n in [-N/2, N/2). The wave vector is
// xi_k = 2*pi*n_k / L_k. The unpaired Nyquist rows (n = -N/2) have no
// Hermitian partner and are forced to zero in every constructed field.

#include <cstddef>
#include <cstdlib>
#include <memory>
#include <new>
#include <stdexcept>
#include <vector>

namespace mps {

// 64-byte aligned allocator so FFTW new-array execution sees a uniform
// alignment across all field buffers.
template <class T>
struct AlignedAllocator {
    using value_type = T;
    static constexpr std::size_t alignment = 64;

    AlignedAllocator() noexcept = default;
    template <class U>
    AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

    T* allocate(std::size_t n) {
        void* p = std::aligned_alloc(alignment, ((n * sizeof(T) + alignment - 1) / alignment) * alignment);
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) noexcept { std::free(p); }

    template <class U>
    bool operator==(const AlignedAllocator<U>&) const noexcept { return true; }
};

template <class T>
using aligned_vector = std::vector<T, AlignedAllocator<T>>;

class WaveGrid {
public:
    WaveGrid(int n1, int n2, int n3, double l1, double l2, double l3)
        : n_{n1, n2, n3}, l_{l1, l2, l3} {
        for (int a = 0; a < 3; ++a) {
            if (n_[a] <= 0 || n_[a] % 2 != 0)
                throw std::invalid_argument("WaveGrid: dims must be positive even integers");
            if (!(l_[a] > 0.0))
                throw std::invalid_argument("WaveGrid: box lengths must be positive");
        }
        for (int a = 0; a < 3; ++a) {
            xi_[a].resize(static_cast<std::size_t>(n_[a]));
            for (int i = 0; i < n_[a]; ++i)
                xi_[a][static_cast<std::size_t>(i)] = two_pi() * mode(a, i) / l_[a];
        }
    }

    int dim(int axis) const { return n_[axis]; }
    double box(int axis) const { return l_[axis]; }
    std::size_t size() const {
        return static_cast<std::size_t>(n_[0]) * static_cast<std::size_t>(n_[1]) *
               static_cast<std::size_t>(n_[2]);
    }

    // integer mode for storage index i on an axis
    int mode(int axis, int i) const { return i < n_[axis] / 2 ? i : i - n_[axis]; }
    // storage index for integer mode n in [-N/2, N/2)
    int index_of_mode(int axis, int n) const { return n >= 0 ? n : n + n_[axis]; }

    double xi(int axis, int i) const { return xi_[axis][static_cast<std::size_t>(i)]; }
    const aligned_vector<double>& xi_axis(int axis) const { return xi_[axis]; }

    std::size_t index(int i1, int i2, int i3) const {
        return (static_cast<std::size_t>(i1) * static_cast<std::size_t>(n_[1]) +
                static_cast<std::size_t>(i2)) *
                   static_cast<std::size_t>(n_[2]) +
               static_cast<std::size_t>(i3);
    }

    bool is_nyquist(int i1, int i2, int i3) const {
        return i1 == n_[0] / 2 || i2 == n_[1] / 2 || i3 == n_[2] / 2;
    }

    double volume() const { return l_[0] * l_[1] * l_[2]; }
    double cell_volume() const { return volume() / static_cast<double>(size()); }
    // frequency cell volume (2*pi)^3 / (L1*L2*L3)
    double delta_xi() const { return two_pi() * two_pi() * two_pi() / volume(); }
    // series coefficient -> continuous-transform value (f(x) = integral of
    // a(xi) e^{i xi.x} dxi convention)
    double continuum_factor() const { return volume() / (two_pi() * two_pi() * two_pi()); }

    // dealias cutoff: modes with |n| > N/3 on any axis are zeroed
    int dealias_limit(int axis) const { return n_[axis] / 3; }

    static constexpr double two_pi() { return 6.283185307179586476925286766559; }

private:
    int n_[3];
    double l_[3];
    aligned_vector<double> xi_[3];
};

using GridPtr = std::shared_ptr<const WaveGrid>;

inline GridPtr make_grid(int n1, int n2, int n3, double l1, double l2, double l3) {
    return std::make_shared<const WaveGrid>(n1, n2, n3, l1, l2, l3);
}

inline GridPtr make_cubic_grid(int n, double l) { return make_grid(n, n, n, l, l, l); }

} // namespace mps
