#include "gbent/kernels.hpp"

namespace gbent::kernels {

void butterfly_pair_scalar(std::int64_t* a, std::int64_t* b, std::size_t len) noexcept {
    for (std::size_t i = 0; i < len; ++i) {
        const std::int64_t x = a[i];
        const std::int64_t y = b[i];
        a[i] = x + y;
        b[i] = x - y;
    }
}

}  // namespace gbent::kernels
