#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gbent {

using BigInt = boost::multiprecision::cpp_int;

// Exact element of Z[zeta_{2^k}] ~ Z[x]/(x^{2^{k-1}} + 1), stored as the
// coefficient vector in the power basis {1, zeta, ..., zeta^{2^{k-1}-1}}.
// Coefficient-vector equality is element equality (the basis property), so
// all decisions downstream reduce to exact integer comparisons. Values are
// immutable after construction; every operation returns a fresh value.
class CycInt {
public:
    static constexpr int kMinLevel = 1;
    static constexpr int kMaxLevel = 6;

    // Zero element of Z[zeta_{2^level}].
    explicit CycInt(int level);
    CycInt(int level, std::vector<BigInt> coeffs);

    // zeta_{2^level}^e for any integer e; the representation is the unique
    // one with a single coefficient +-1 (zeta^{2^{level-1}} = -1).
    static CycInt root_power(int level, std::int64_t e);
    static CycInt from_integer(int level, BigInt value);

    int level() const noexcept { return level_; }
    // Number of coefficients, 2^{level-1}.
    std::size_t degree() const noexcept { return coeffs_.size(); }
    const BigInt& coeff(std::size_t j) const { return coeffs_.at(j); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    CycInt operator-() const;
    CycInt operator+(const CycInt& rhs) const;
    CycInt operator-(const CycInt& rhs) const;
    // Negacyclic convolution: coefficient wrap past degree-1 re-enters negated.
    CycInt operator*(const CycInt& rhs) const;
    CycInt operator*(const BigInt& scalar) const;

    // Complex conjugation zeta -> zeta^{-1}; an involutive ring automorphism.
    CycInt conj() const;
    // a * conj(a); always equal to its own conjugate.
    CycInt norm_sq() const;

    // coeffs[0] iff all higher coefficients vanish, otherwise empty.
    std::optional<BigInt> as_integer() const;

    // Ring embedding into Z[zeta_{2^target}] via zeta_{2^k} = zeta_{2^target}^{2^{target-k}}.
    CycInt embed(int target_level) const;

    bool operator==(const CycInt& rhs) const noexcept = default;

    // Debug rendering: "c0 + c1·z + ..." plus, via approx(), a floating
    // complex value. Display only; never used for decisions.
    std::string str() const;
    std::complex<double> approx() const;

private:
    int level_;
    std::vector<BigInt> coeffs_;
};

}  // namespace gbent
