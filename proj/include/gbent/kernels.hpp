#pragma once

#include <cstddef>
#include <cstdint>

// Low-level transform kernels. The in-place Hadamard butterfly over rows of
// int64 coefficients is the single hot inner loop shared by the integer
// Walsh-Hadamard transform (row_len = 1) and the generalized transform
// (row_len = 2^{k-1}). A scalar reference kernel and an AVX2 variant are
// provided; the variant is selected once at runtime and the two are
// equivalence-tested against each other.
namespace gbent::kernels {

enum class Isa { scalar, avx2 };

// Resolved once per process. Honors GBENT_SIMD=scalar|avx2|auto.
Isa active_isa();
const char* isa_name(Isa isa);
bool avx2_available() noexcept;

// (a[i], b[i]) <- (a[i] + b[i], a[i] - b[i]) for i in [0, len).
void butterfly_pair_scalar(std::int64_t* a, std::int64_t* b, std::size_t len) noexcept;
void butterfly_pair_avx2(std::int64_t* a, std::int64_t* b, std::size_t len) noexcept;

// Full in-place transform over 2^stages rows of row_len coefficients each,
// using the active kernel. Equivalent to applying the +-1 Hadamard matrix
// of order 2^stages to the rows (unnormalized).
void hadamard_rows(std::int64_t* data, int stages, std::size_t row_len);

// Same, pinned to a specific kernel (used by equivalence tests).
void hadamard_rows_with(Isa isa, std::int64_t* data, int stages, std::size_t row_len);

}  // namespace gbent::kernels
