#pragma once
// Counter-based deterministic generator (splitmix64 finalizer). Every random
// test field is a pure function of (seed, counter), so runs reproduce
// byte-identically across processes and machines.

#include <cstdint>

namespace mps {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (counter + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    // uniform in [-1,1)
    double symmetric(std::uint64_t counter) const { return 2.0 * uniform(counter) - 1.0; }

    // stateful convenience for sequential draws
    double next_uniform() { return uniform(counter_++); }
    double next_symmetric() { return symmetric(counter_++); }
    std::uint64_t next_bits() { return bits(counter_++); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace mps
