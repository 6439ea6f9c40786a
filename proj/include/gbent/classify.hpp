#pragma once

#include <cstdint>
#include <optional>

#include "gbent/tables.hpp"
#include "gbent/transform.hpp"

namespace gbent {

// Spectral plateau classification of a generalized table: plateaued(s) means
// every squared modulus lies in {0, 2^{n+s}} for the single recorded s >= 0.
// plateaued(0) is exactly gbent; plateaued(1) is generalized semibent.
struct PlateauResult {
    enum class Kind { plateaued, not_plateaued };
    Kind kind = Kind::not_plateaued;
    int s = -1;
    std::optional<std::uint32_t> witness;  // a point breaking the pattern

    bool plateaued(int level) const { return kind == Kind::plateaued && s == level; }
};

PlateauResult plateau_level(const GwhtSpectrum& spectrum);
PlateauResult plateau_level(const GbfTable& f);

bool is_gbent(const GwhtSpectrum& spectrum);
bool is_gbent(const GbfTable& f);

// Regularity: H_f(u) = 2^{n/2} zeta^{f*(u)} for all u, with f* returned as
// the dual table. For k = 2 and odd n the required value 2^{n/2} zeta_4^j
// involves sqrt(2), which is not an element of Z[i]: not_representable.
struct DualResult {
    enum class Kind { regular, not_regular, not_representable };
    Kind kind = Kind::not_regular;
    std::optional<GbfTable> dual;
    std::optional<std::uint32_t> witness;  // point matching no pattern
};

// Precondition: is_gbent(f); throws std::invalid_argument otherwise.
DualResult regular_dual(const GbfTable& f);

// Value-distribution characterization of gbent functions (even n only):
// for every u there is a single residue rho with the half-period count
// shifted by 2^{n/2}, all other counts period-2^{k-1} equal.
bool gbent_by_distribution(const GbfTable& f);

// Boolean spectral class. bent is plateaued(0) (even n, no zeros);
// semibent is s = 1 (odd n) or s = 2 (even n).
struct BooleanClass {
    enum class Kind { bent, plateaued, not_plateaued };
    Kind kind = Kind::not_plateaued;
    int n = 0;
    int s = -1;
    std::optional<std::uint32_t> witness;

    bool is_bent() const { return kind == Kind::bent; }
    bool is_semibent() const {
        return kind == Kind::plateaued && s == ((n & 1) ? 1 : 2);
    }
    bool plateaued(int level) const {
        return (kind == Kind::plateaued && s == level) || (kind == Kind::bent && level == 0);
    }
};

BooleanClass boolean_class(const IntSpectrum& spectrum);
BooleanClass boolean_class(const BoolTable& b);

}  // namespace gbent
