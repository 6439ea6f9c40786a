#include "gbent/transform.hpp"

#include <stdexcept>

#include "gbent/errors.hpp"
#include "gbent/kernels.hpp"

namespace gbent {

namespace {

using Acc = __int128;

[[noreturn]] void invariant_failure(const char* what) {
    throw std::logic_error(std::string("spectrum invariant violated: ") + what);
}

}  // namespace

IntSpectrum::IntSpectrum(int n, std::vector<std::int64_t> values)
    : n_(n), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("IntSpectrum: wrong number of values");
    }
    Acc sum = 0;
    const std::int64_t parity = (std::int64_t{1} << n) & 1;
    for (const std::int64_t v : values_) {
        sum += Acc(v) * v;
        if (((v & 1) != parity)) invariant_failure("Walsh value parity");
    }
    if (sum != (Acc(1) << (2 * n))) invariant_failure("integer Parseval");
}

GwhtSpectrum GwhtSpectrum::from_rows(int n, int k, std::vector<std::int64_t> rows) {
    GwhtSpectrum s(n, k);
    const std::size_t r = std::size_t{1} << (k - 1);
    if (rows.size() != (std::size_t{1} << n) * r) {
        throw std::invalid_argument("GwhtSpectrum: wrong row matrix size");
    }
    s.coeffs_ = std::move(rows);
    s.norms_.assign(s.coeffs_.size(), 0);

    // Negacyclic a * conj(a) per row: norm[d] = sum over i-j = d (mod wrap).
    const std::uint32_t points = std::uint32_t{1} << n;
    for (std::uint32_t u = 0; u < points; ++u) {
        const std::int64_t* a = s.coeffs_.data() + std::size_t{u} * r;
        std::int64_t* out = s.norms_.data() + std::size_t{u} * r;
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < r; ++j) {
                if (a[j] == 0) continue;
                // conj moves coefficient j to 2r - j with sign flip for j > 0;
                // fold i + (conj position) through zeta^r = -1.
                if (j == 0) {
                    out[i] += a[i] * a[0];
                } else {
                    const std::size_t p = i + r - j;
                    if (p < r) {
                        out[p] -= a[i] * a[j];
                    } else {
                        out[p - r] += a[i] * a[j];
                    }
                }
            }
        }
    }

    // Parseval: the coefficientwise sum of all norm rows must be 4^n * 1.
    std::vector<Acc> acc(r, 0);
    for (std::uint32_t u = 0; u < points; ++u) {
        const std::int64_t* nr = s.norms_.data() + std::size_t{u} * r;
        for (std::size_t j = 0; j < r; ++j) acc[j] += nr[j];
    }
    if (acc[0] != (Acc(1) << (2 * n))) invariant_failure("Parseval constant term");
    for (std::size_t j = 1; j < r; ++j) {
        if (acc[j] != 0) invariant_failure("Parseval higher term");
    }
    return s;
}

CycInt GwhtSpectrum::value(std::uint32_t u) const {
    std::vector<BigInt> c(row_len());
    const auto rr = row(u);
    for (std::size_t j = 0; j < rr.size(); ++j) c[j] = rr[j];
    return CycInt(k_, std::move(c));
}

CycInt GwhtSpectrum::modulus_sq(std::uint32_t u) const {
    std::vector<BigInt> c(row_len());
    const auto rr = norm_row(u);
    for (std::size_t j = 0; j < rr.size(); ++j) c[j] = rr[j];
    return CycInt(k_, std::move(c));
}

std::optional<std::int64_t> GwhtSpectrum::modulus_sq_integer(std::uint32_t u) const noexcept {
    const auto rr = norm_row(u);
    for (std::size_t j = 1; j < rr.size(); ++j) {
        if (rr[j] != 0) return std::nullopt;
    }
    return rr[0];
}

IntSpectrum wht(const BoolTable& b) {
    const std::uint32_t points = b.size();
    std::vector<std::int64_t> data(points);
    for (std::uint32_t x = 0; x < points; ++x) data[x] = b.get(x) ? -1 : 1;
    kernels::hadamard_rows(data.data(), b.vars(), 1);
    return IntSpectrum(b.vars(), std::move(data));
}

GwhtSpectrum gwht(const GbfTable& f) {
    const std::uint32_t points = f.size();
    const std::size_t r = std::size_t{1} << (f.level() - 1);
    std::vector<std::int64_t> rows(points * r, 0);
    for (std::uint32_t x = 0; x < points; ++x) {
        const std::uint8_t v = f.value(x);
        // zeta^v: coefficient +-1 at v mod r, negative past the half turn.
        if (v < r) {
            rows[std::size_t{x} * r + v] = 1;
        } else {
            rows[std::size_t{x} * r + (v - r)] = -1;
        }
    }
    kernels::hadamard_rows(rows.data(), f.vars(), r);
    return GwhtSpectrum::from_rows(f.vars(), f.level(), std::move(rows));
}

GwhtSpectrum gwht_naive(const GbfTable& f) {
    if (f.vars() > 14) {
        throw InfeasibleError("gwht_naive is quadratic; refusing n > 14");
    }
    const std::uint32_t points = f.size();
    const int k = f.level();
    const std::size_t r = std::size_t{1} << (k - 1);
    std::vector<std::int64_t> rows(points * r);
    for (std::uint32_t u = 0; u < points; ++u) {
        CycInt acc(k);
        for (std::uint32_t x = 0; x < points; ++x) {
            const CycInt term = CycInt::root_power(k, f.value(x));
            acc = dot2(u, x) ? acc - term : acc + term;
        }
        for (std::size_t j = 0; j < r; ++j) {
            // Exact by construction: |coefficient| <= 2^n.
            rows[std::size_t{u} * r + j] = static_cast<std::int64_t>(acc.coeff(j));
        }
    }
    return GwhtSpectrum::from_rows(f.vars(), k, std::move(rows));
}

ValueDistribution value_distribution(const GbfTable& f, std::uint32_t u) {
    ValueDistribution d;
    d.u = u;
    d.counts.assign(f.modulus(), 0);
    const std::uint32_t half = f.modulus() / 2;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        const std::uint32_t v = (f.value(x) + half * dot2(u, x)) & (f.modulus() - 1);
        ++d.counts[v];
    }
    return d;
}

CycInt crosscorrelation(const GbfTable& f, const GbfTable& g, std::uint32_t z) {
    if (f.vars() != g.vars() || f.level() != g.level()) {
        throw std::invalid_argument("crosscorrelation: mismatched table shapes");
    }
    const std::uint32_t q = f.modulus();
    std::vector<std::int64_t> hist(q, 0);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        const std::uint32_t d = (f.value(x) - g.value(x ^ z) + q) & (q - 1);
        ++hist[d];
    }
    CycInt acc(f.level());
    for (std::uint32_t d = 0; d < q; ++d) {
        if (hist[d] != 0) acc = acc + CycInt::root_power(f.level(), d) * BigInt(hist[d]);
    }
    return acc;
}

CycInt autocorrelation(const GbfTable& f, std::uint32_t u) {
    return crosscorrelation(f, f, u);
}

std::int64_t bool_autocorrelation(const BoolTable& f, std::uint32_t u) {
    std::int64_t acc = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        acc += (f.get(x) ^ f.get(x ^ u)) ? -1 : 1;
    }
    return acc;
}

bool complementary_autocorrelation(const BoolTable& f, const BoolTable& g) {
    if (f.vars() != g.vars()) {
        throw std::invalid_argument("complementary_autocorrelation: mismatched variable counts");
    }
    for (std::uint32_t u = 1; u < f.size(); ++u) {
        if (bool_autocorrelation(f, u) + bool_autocorrelation(g, u) != 0) return false;
    }
    return true;
}

}  // namespace gbent
