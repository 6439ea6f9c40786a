#include "gbent/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gbent {

namespace {

void check_level(int level) {
    if (level < CycInt::kMinLevel || level > CycInt::kMaxLevel) {
        throw std::invalid_argument("cyclotomic level must be in [1,6], got " +
                                    std::to_string(level));
    }
}

void check_same_level(const CycInt& a, const CycInt& b) {
    if (a.level() != b.level()) {
        throw std::invalid_argument("mismatched cyclotomic levels: " +
                                    std::to_string(a.level()) + " vs " +
                                    std::to_string(b.level()));
    }
}

}  // namespace

CycInt::CycInt(int level) : level_(level) {
    check_level(level);
    coeffs_.assign(std::size_t{1} << (level - 1), BigInt(0));
}

CycInt::CycInt(int level, std::vector<BigInt> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    check_level(level);
    if (coeffs_.size() != (std::size_t{1} << (level - 1))) {
        throw std::invalid_argument("coefficient vector must have length 2^{level-1}");
    }
}

CycInt CycInt::root_power(int level, std::int64_t e) {
    check_level(level);
    const std::int64_t order = std::int64_t{1} << level;
    std::int64_t r = e % order;
    if (r < 0) r += order;
    CycInt out(level);
    const std::int64_t half = order / 2;
    if (r < half) {
        out.coeffs_[static_cast<std::size_t>(r)] = 1;
    } else {
        out.coeffs_[static_cast<std::size_t>(r - half)] = -1;
    }
    return out;
}

CycInt CycInt::from_integer(int level, BigInt value) {
    CycInt out(level);
    out.coeffs_[0] = std::move(value);
    return out;
}

bool CycInt::is_zero() const noexcept {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

CycInt CycInt::operator-() const {
    CycInt out(level_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = -coeffs_[j];
    return out;
}

CycInt CycInt::operator+(const CycInt& rhs) const {
    check_same_level(*this, rhs);
    CycInt out(level_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = coeffs_[j] + rhs.coeffs_[j];
    return out;
}

CycInt CycInt::operator-(const CycInt& rhs) const {
    check_same_level(*this, rhs);
    CycInt out(level_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = coeffs_[j] - rhs.coeffs_[j];
    return out;
}

CycInt CycInt::operator*(const CycInt& rhs) const {
    check_same_level(*this, rhs);
    // Schoolbook negacyclic convolution; at most 32x32 terms at level 6.
    const std::size_t r = coeffs_.size();
    CycInt out(level_);
    for (std::size_t i = 0; i < r; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            const std::size_t p = i + j;
            if (p < r) {
                out.coeffs_[p] += coeffs_[i] * rhs.coeffs_[j];
            } else {
                out.coeffs_[p - r] -= coeffs_[i] * rhs.coeffs_[j];
            }
        }
    }
    return out;
}

CycInt CycInt::operator*(const BigInt& scalar) const {
    CycInt out(level_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = coeffs_[j] * scalar;
    return out;
}

CycInt CycInt::conj() const {
    const std::size_t r = coeffs_.size();
    CycInt out(level_);
    out.coeffs_[0] = coeffs_[0];
    for (std::size_t j = 1; j < r; ++j) out.coeffs_[r - j] = -coeffs_[j];
    return out;
}

CycInt CycInt::norm_sq() const { return *this * conj(); }

std::optional<BigInt> CycInt::as_integer() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        if (coeffs_[j] != 0) return std::nullopt;
    }
    return coeffs_[0];
}

CycInt CycInt::embed(int target_level) const {
    if (target_level < level_) {
        throw std::invalid_argument("embed target level must be >= source level");
    }
    check_level(target_level);
    const std::size_t stride = std::size_t{1} << (target_level - level_);
    CycInt out(target_level);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j * stride] = coeffs_[j];
    return out;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        BigInt c = coeffs_[j];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (j == 0) {
            os << c.str();
        } else {
            if (c != 1) os << c.str() << "·";
            os << "ζ";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::complex<double> CycInt::approx() const {
    const double order = static_cast<double>(std::int64_t{1} << level_);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / order;
        acc += static_cast<double>(coeffs_[j]) * std::complex<double>{std::cos(theta), std::sin(theta)};
    }
    return acc;
}

}  // namespace gbent
