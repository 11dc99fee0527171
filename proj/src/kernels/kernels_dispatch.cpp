#include "mps/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mps::kernels {

namespace {

const Ops& select() {
    const char* pref = std::getenv("MPS_SIMD");
    if (pref && std::strcmp(pref, "scalar") == 0) return scalar_ops();
    const Ops* avx2 = avx2_ops_or_null();
    if (pref && std::strcmp(pref, "avx2") == 0 && avx2) return *avx2;
    if (avx2) return *avx2;
    return scalar_ops();
}

} // namespace

const Ops& ops() {
    static const Ops& selected = select();
    return selected;
}

} // namespace mps::kernels
