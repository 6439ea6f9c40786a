#include "gbent/classify.hpp"

#include <bit>
#include <stdexcept>

namespace gbent {

namespace {

// s with value = 2^{n+s}, s >= 0, or nullopt.
std::optional<int> plateau_exponent(std::int64_t value, int n) {
    if (value <= 0) return std::nullopt;
    const auto uv = static_cast<std::uint64_t>(value);
    if (!std::has_single_bit(uv)) return std::nullopt;
    const int s = std::countr_zero(uv) - n;
    if (s < 0) return std::nullopt;
    return s;
}

}  // namespace

PlateauResult plateau_level(const GwhtSpectrum& spectrum) {
    PlateauResult res;
    std::optional<std::int64_t> plateau;
    std::uint32_t plateau_u = 0;
    for (std::uint32_t u = 0; u < spectrum.size(); ++u) {
        const auto m = spectrum.modulus_sq_integer(u);
        if (!m) {
            // Irrational squared modulus: cannot be plateaued.
            res.kind = PlateauResult::Kind::not_plateaued;
            res.witness = u;
            return res;
        }
        if (*m == 0) continue;
        if (!plateau) {
            plateau = *m;
            plateau_u = u;
        } else if (*plateau != *m) {
            res.kind = PlateauResult::Kind::not_plateaued;
            res.witness = u;
            return res;
        }
    }
    // Parseval rules out the all-zero spectrum.
    const auto s = plateau_exponent(*plateau, spectrum.vars());
    if (!s) {
        res.kind = PlateauResult::Kind::not_plateaued;
        res.witness = plateau_u;
        return res;
    }
    res.kind = PlateauResult::Kind::plateaued;
    res.s = *s;
    return res;
}

PlateauResult plateau_level(const GbfTable& f) { return plateau_level(gwht(f)); }

bool is_gbent(const GwhtSpectrum& spectrum) {
    const std::int64_t target = std::int64_t{1} << spectrum.vars();
    for (std::uint32_t u = 0; u < spectrum.size(); ++u) {
        const auto m = spectrum.modulus_sq_integer(u);
        if (!m || *m != target) return false;
    }
    return true;
}

bool is_gbent(const GbfTable& f) { return is_gbent(gwht(f)); }

DualResult regular_dual(const GbfTable& f) {
    const GwhtSpectrum spectrum = gwht(f);
    if (!is_gbent(spectrum)) {
        throw std::invalid_argument("regular_dual requires a gbent input");
    }
    const int n = f.vars();
    const int k = f.level();
    DualResult res;
    if (k == 2 && (n & 1)) {
        res.kind = DualResult::Kind::not_representable;
        return res;
    }
    // k = 1 cannot be gbent for odd n (integer spectrum), so odd n here
    // implies k >= 3 and the two-root sqrt(2) pattern applies.
    const std::size_t r = spectrum.row_len();
    const std::uint32_t q = std::uint32_t{1} << k;
    std::vector<std::vector<std::int64_t>> patterns(q, std::vector<std::int64_t>(r, 0));
    auto add_root = [&](std::vector<std::int64_t>& row, std::uint32_t e, std::int64_t scale) {
        e &= q - 1;
        if (e < r) row[e] += scale; else row[e - r] -= scale;
    };
    if ((n & 1) == 0) {
        const std::int64_t m = std::int64_t{1} << (n / 2);
        for (std::uint32_t j = 0; j < q; ++j) add_root(patterns[j], j, m);
    } else {
        const std::int64_t m = std::int64_t{1} << ((n - 1) / 2);
        const std::uint32_t eighth = std::uint32_t{1} << (k - 3);  // zeta^eighth = zeta_8
        for (std::uint32_t j = 0; j < q; ++j) {
            add_root(patterns[j], j + eighth, m);
            add_root(patterns[j], j + q - eighth, m);
        }
    }
    GbfTable dual(n, k);
    for (std::uint32_t u = 0; u < spectrum.size(); ++u) {
        const auto row = spectrum.row(u);
        bool matched = false;
        for (std::uint32_t j = 0; j < q && !matched; ++j) {
            matched = std::equal(row.begin(), row.end(), patterns[j].begin());
            if (matched) dual.set_value(u, static_cast<std::uint8_t>(j));
        }
        if (!matched) {
            res.kind = DualResult::Kind::not_regular;
            res.witness = u;
            return res;
        }
    }
    res.kind = DualResult::Kind::regular;
    res.dual = std::move(dual);
    return res;
}

bool gbent_by_distribution(const GbfTable& f) {
    const int n = f.vars();
    if (n & 1) {
        throw std::invalid_argument("gbent_by_distribution is defined for even n only");
    }
    const std::uint32_t half = f.modulus() / 2;
    const std::uint64_t step = std::uint64_t{1} << (n / 2);
    for (std::uint32_t u = 0; u < f.size(); ++u) {
        const ValueDistribution d = value_distribution(f, u);
        int shifted = 0;
        for (std::uint32_t j = 0; j < half; ++j) {
            const auto lo = d.counts[j];
            const auto hi = d.counts[half + j];
            if (lo == hi) continue;
            const std::uint64_t diff = lo > hi ? lo - hi : hi - lo;
            if (diff != step) return false;
            ++shifted;
        }
        if (shifted != 1) return false;
    }
    return true;
}

BooleanClass boolean_class(const IntSpectrum& spectrum) {
    BooleanClass res;
    res.n = spectrum.vars();
    std::optional<std::int64_t> magnitude;
    std::uint32_t magnitude_u = 0;
    bool saw_zero = false;
    for (std::uint32_t u = 0; u < spectrum.size(); ++u) {
        const std::int64_t a = spectrum[u] < 0 ? -spectrum[u] : spectrum[u];
        if (a == 0) {
            saw_zero = true;
            continue;
        }
        if (!magnitude) {
            magnitude = a;
            magnitude_u = u;
        } else if (*magnitude != a) {
            res.kind = BooleanClass::Kind::not_plateaued;
            res.witness = u;
            return res;
        }
    }
    const auto uv = static_cast<std::uint64_t>(*magnitude);
    if (!std::has_single_bit(uv)) {
        res.kind = BooleanClass::Kind::not_plateaued;
        res.witness = magnitude_u;
        return res;
    }
    const int s = 2 * std::countr_zero(uv) - spectrum.vars();
    if (s < 0) {
        res.kind = BooleanClass::Kind::not_plateaued;
        res.witness = magnitude_u;
        return res;
    }
    if (s == 0 && !saw_zero) {
        res.kind = BooleanClass::Kind::bent;
        res.s = 0;
        return res;
    }
    res.kind = BooleanClass::Kind::plateaued;
    res.s = s;
    return res;
}

BooleanClass boolean_class(const BoolTable& b) { return boolean_class(wht(b)); }

}  // namespace gbent
