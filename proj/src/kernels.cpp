#include "gbent/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gbent::kernels {

namespace {

Isa resolve_isa() {
    const char* env = std::getenv("GBENT_SIMD");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0) {
            return avx2_available() ? Isa::avx2 : Isa::scalar;
        }
        // anything else (including "auto") falls through to detection
    }
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

using PairFn = void (*)(std::int64_t*, std::int64_t*, std::size_t) noexcept;

PairFn pair_fn(Isa isa) {
    return isa == Isa::avx2 ? &butterfly_pair_avx2 : &butterfly_pair_scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = resolve_isa();
    return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void hadamard_rows_with(Isa isa, std::int64_t* data, int stages, std::size_t row_len) {
    const PairFn fn = pair_fn(isa);
    const std::size_t total = (std::size_t{1} << stages) * row_len;
    for (int t = 0; t < stages; ++t) {
        // Stage t pairs row blocks 2^t apart; each block is contiguous.
        const std::size_t block = row_len << t;
        for (std::size_t base = 0; base < total; base += 2 * block) {
            fn(data + base, data + base + block, block);
        }
    }
}

void hadamard_rows(std::int64_t* data, int stages, std::size_t row_len) {
    hadamard_rows_with(active_isa(), data, stages, row_len);
}

}  // namespace gbent::kernels
