#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbent/errors.hpp"

namespace gbent {

// Dot product over F_2 with the fixed index convention: coordinate 1 is the
// least significant bit of the point index.
inline int dot2(std::uint32_t u, std::uint32_t x) noexcept {
    return __builtin_parity(u & x);
}

// Boolean function on n variables as a bit-packed truth table.
class BoolTable {
public:
    static constexpr int kMaxVars = 29;

    explicit BoolTable(int n);
    static BoolTable from_bits(int n, const std::vector<std::uint8_t>& bits);

    int vars() const noexcept { return n_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << n_; }

    bool get(std::uint32_t x) const noexcept {
        return (words_[x >> 6] >> (x & 63)) & 1u;
    }
    void set(std::uint32_t x, bool v) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (x & 63);
        if (v) words_[x >> 6] |= mask; else words_[x >> 6] &= ~mask;
    }

    BoolTable& operator^=(const BoolTable& rhs);
    BoolTable operator^(const BoolTable& rhs) const;
    // Pointwise complement.
    BoolTable operator~() const;

    std::uint64_t weight() const noexcept;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    bool operator==(const BoolTable& rhs) const noexcept = default;

    // The linear function x -> <mask, x>, optionally complemented.
    static BoolTable linear(int n, std::uint32_t mask, bool complement = false);

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

// Generalized Boolean function f: F_2^n -> Z_{2^k} as a table of residues.
class GbfTable {
public:
    static constexpr int kMaxVars = 24;
    static constexpr int kMinLevel = 1;
    static constexpr int kMaxLevel = 6;

    GbfTable(int n, int k);  // zero function
    GbfTable(int n, int k, std::vector<std::uint8_t> values);

    // Text formats: "k:n:v0,v1,..." (decimal) or "k:n:hexstring" (one hex
    // digit per value, k <= 4).
    static GbfTable parse(std::string_view text);
    std::string serialize() const;

    int vars() const noexcept { return n_; }
    int level() const noexcept { return k_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << n_; }
    std::uint32_t modulus() const noexcept { return std::uint32_t{1} << k_; }

    std::uint8_t value(std::uint32_t x) const noexcept { return values_[x]; }
    void set_value(std::uint32_t x, std::uint8_t v);
    const std::vector<std::uint8_t>& values() const noexcept { return values_; }

    bool operator==(const GbfTable& rhs) const noexcept = default;

private:
    int n_;
    int k_;
    std::vector<std::uint8_t> values_;
};

// Bit-plane decomposition: (a_1, ..., a_k) with f(x) = sum_i 2^{i-1} a_i(x).
std::vector<BoolTable> components(const GbfTable& f);
GbfTable combine(const std::vector<BoolTable>& parts, int k);

// Digit split at 2^j: low(x) = f(x) mod 2^j, high(x) = floor(f(x) / 2^j).
std::pair<GbfTable, GbfTable> regroup(const GbfTable& f, int j);

// Generalized Gray map onto n+k-1 variables: x occupies the low n index
// bits, y_j is index bit n+j-1, and the image is a_k(x) ^ XOR_j y_j a_j(x).
BoolTable gray_map(const GbfTable& f);

}  // namespace gbent
