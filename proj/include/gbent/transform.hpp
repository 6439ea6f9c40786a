#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gbent/cyclotomic.hpp"
#include "gbent/tables.hpp"

namespace gbent {

// Integer Walsh-Hadamard spectrum of a Boolean function. Construction
// asserts Parseval (sum of squares = 4^n) and the parity invariant
// (every value is congruent to 2^n mod 2).
class IntSpectrum {
public:
    IntSpectrum(int n, std::vector<std::int64_t> values);

    int vars() const noexcept { return n_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << n_; }
    std::int64_t operator[](std::uint32_t u) const noexcept { return values_[u]; }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    bool operator==(const IntSpectrum& rhs) const noexcept = default;

private:
    int n_;
    std::vector<std::int64_t> values_;
};

// All 2^n generalized Walsh-Hadamard values of a table, plus the cached
// squared moduli. Rows are stored as flat int64 coefficient vectors in the
// power basis; this is exact (every coefficient of a spectrum value is a
// signed sum of at most 2^n <= 2^24 unit roots, and every squared-modulus
// coefficient is bounded by 2^{2n+5}). The CycInt accessors materialize the
// ring elements on demand. Parseval (sum of squared moduli = 4^n exactly)
// is asserted at construction.
class GwhtSpectrum {
public:
    static GwhtSpectrum from_rows(int n, int k, std::vector<std::int64_t> rows);

    int vars() const noexcept { return n_; }
    int level() const noexcept { return k_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << n_; }
    std::size_t row_len() const noexcept { return std::size_t{1} << (k_ - 1); }

    std::span<const std::int64_t> row(std::uint32_t u) const noexcept {
        return {coeffs_.data() + std::size_t{u} * row_len(), row_len()};
    }
    std::span<const std::int64_t> norm_row(std::uint32_t u) const noexcept {
        return {norms_.data() + std::size_t{u} * row_len(), row_len()};
    }

    CycInt value(std::uint32_t u) const;
    CycInt modulus_sq(std::uint32_t u) const;

    // Squared modulus at u as a plain integer, when it is rational.
    // (All non-constant coefficients of the norm row must vanish.)
    std::optional<std::int64_t> modulus_sq_integer(std::uint32_t u) const noexcept;

    bool operator==(const GwhtSpectrum& rhs) const noexcept = default;

private:
    GwhtSpectrum(int n, int k) : n_(n), k_(k) {}

    int n_;
    int k_;
    std::vector<std::int64_t> coeffs_;
    std::vector<std::int64_t> norms_;
};

// Fast transforms (in-place butterflies over the kernel lane).
IntSpectrum wht(const BoolTable& b);
GwhtSpectrum gwht(const GbfTable& f);

// Literal double-sum oracle over exact CycInt arithmetic; quadratic cost,
// guarded to n <= 14. Same contract as gwht, used to cross-check it.
GwhtSpectrum gwht_naive(const GbfTable& f);

// Counts of the values of f_u(x) = f(x) + 2^{k-1} <u,x> (mod 2^k).
struct ValueDistribution {
    std::uint32_t u = 0;
    std::vector<std::uint64_t> counts;  // size 2^k, sums to 2^n
};
ValueDistribution value_distribution(const GbfTable& f, std::uint32_t u);

// C_{f,g}(z) = sum_x zeta^{f(x) - g(x xor z)}.
CycInt crosscorrelation(const GbfTable& f, const GbfTable& g, std::uint32_t z);
CycInt autocorrelation(const GbfTable& f, std::uint32_t u);

// Boolean autocorrelation sum_x (-1)^{f(x) xor f(x xor u)}.
std::int64_t bool_autocorrelation(const BoolTable& f, std::uint32_t u);

// True iff C_f(u) + C_g(u) = 0 at every nonzero shift.
bool complementary_autocorrelation(const BoolTable& f, const BoolTable& g);

}  // namespace gbent
