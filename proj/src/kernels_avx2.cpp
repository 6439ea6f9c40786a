#include "gbent/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace gbent::kernels {

bool avx2_available() noexcept { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2")))
void butterfly_pair_avx2(std::int64_t* a, std::int64_t* b, std::size_t len) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_add_epi64(va, vb));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(b + i), _mm256_sub_epi64(va, vb));
    }
    for (; i < len; ++i) {
        const std::int64_t x = a[i];
        const std::int64_t y = b[i];
        a[i] = x + y;
        b[i] = x - y;
    }
}

}  // namespace gbent::kernels

#else

namespace gbent::kernels {

bool avx2_available() noexcept { return false; }

void butterfly_pair_avx2(std::int64_t* a, std::int64_t* b, std::size_t len) noexcept {
    butterfly_pair_scalar(a, b, len);
}

}  // namespace gbent::kernels

#endif
