#include "gbent/tables.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gbent {

namespace {

std::size_t word_count(int n) {
    return (std::size_t{1} << n) <= 64 ? 1 : ((std::size_t{1} << n) >> 6);
}

void check_bool_vars(int n) {
    if (n < 0 || n > BoolTable::kMaxVars) {
        throw std::invalid_argument("BoolTable variable count out of range [0,29]: " +
                                    std::to_string(n));
    }
}

void check_gbf_shape(int n, int k) {
    if (n < 0 || n > GbfTable::kMaxVars) {
        throw std::invalid_argument("GbfTable variable count out of range [0,24]: " +
                                    std::to_string(n));
    }
    if (k < GbfTable::kMinLevel || k > GbfTable::kMaxLevel) {
        throw std::invalid_argument("GbfTable value width out of range [1,6]: " +
                                    std::to_string(k));
    }
}

// Mask for the unused tail bits of the last word.
std::uint64_t tail_mask(int n) {
    const std::uint32_t bits = std::uint32_t{1} << n;
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

}  // namespace

BoolTable::BoolTable(int n) : n_(n) {
    check_bool_vars(n);
    words_.assign(word_count(n), 0);
}

BoolTable BoolTable::from_bits(int n, const std::vector<std::uint8_t>& bits) {
    BoolTable t(n);
    if (bits.size() != t.size()) {
        throw std::invalid_argument("bit vector must have length 2^n");
    }
    for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, bits[x] & 1);
    return t;
}

BoolTable& BoolTable::operator^=(const BoolTable& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("BoolTable xor: mismatched variable counts");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

BoolTable BoolTable::operator^(const BoolTable& rhs) const {
    BoolTable out = *this;
    out ^= rhs;
    return out;
}

BoolTable BoolTable::operator~() const {
    BoolTable out = *this;
    for (auto& w : out.words_) w = ~w;
    out.words_.back() &= tail_mask(n_);
    return out;
}

std::uint64_t BoolTable::weight() const noexcept {
    std::uint64_t w = 0;
    for (auto word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
    return w;
}

BoolTable BoolTable::linear(int n, std::uint32_t mask, bool complement) {
    BoolTable t(n);
    for (std::uint32_t x = 0; x < t.size(); ++x) {
        t.set(x, (dot2(mask, x) ^ (complement ? 1 : 0)) != 0);
    }
    return t;
}

GbfTable::GbfTable(int n, int k) : n_(n), k_(k) {
    check_gbf_shape(n, k);
    values_.assign(std::size_t{1} << n, 0);
}

GbfTable::GbfTable(int n, int k, std::vector<std::uint8_t> values)
    : n_(n), k_(k), values_(std::move(values)) {
    check_gbf_shape(n, k);
    if (values_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("value vector must have length 2^n");
    }
    for (std::uint8_t v : values_) {
        if (v >= modulus()) {
            throw std::invalid_argument("table value " + std::to_string(v) +
                                        " out of range [0," + std::to_string(modulus()) + ")");
        }
    }
}

void GbfTable::set_value(std::uint32_t x, std::uint8_t v) {
    if (v >= modulus()) throw std::invalid_argument("table value out of range");
    values_[x] = v;
}

GbfTable GbfTable::parse(std::string_view text) {
    const auto p1 = text.find(':');
    const auto p2 = p1 == std::string_view::npos ? p1 : text.find(':', p1 + 1);
    if (p1 == std::string_view::npos || p2 == std::string_view::npos) {
        throw ParseError("malformed table header, expected \"k:n:values\"");
    }
    auto parse_int = [](std::string_view s, const char* what) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw ParseError(std::string("malformed ") + what + " field");
        }
        return v;
    };
    const int k = parse_int(text.substr(0, p1), "k");
    const int n = parse_int(text.substr(p1 + 1, p2 - p1 - 1), "n");
    if (n < 0 || n > kMaxVars || k < kMinLevel || k > kMaxLevel) {
        throw ParseError("table shape out of range: n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
    }
    const std::string_view payload = text.substr(p2 + 1);
    const std::size_t expect = std::size_t{1} << n;
    const std::uint32_t modulus = std::uint32_t{1} << k;

    std::vector<std::uint8_t> values;
    values.reserve(expect);
    if (payload.find(',') != std::string_view::npos || expect == 1) {
        // Decimal list.
        std::size_t pos = 0;
        while (true) {
            const auto comma = payload.find(',', pos);
            const std::string_view tok =
                payload.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            const int v = parse_int(tok, "value");
            if (v < 0 || static_cast<std::uint32_t>(v) >= modulus) {
                throw ParseError("value " + std::to_string(v) + " out of range [0," +
                                 std::to_string(modulus) + ")");
            }
            values.push_back(static_cast<std::uint8_t>(v));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    } else {
        // Hex string, one digit per value.
        if (k > 4) throw ParseError("hex table format requires k <= 4");
        for (char c : payload) {
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else throw ParseError(std::string("invalid hex digit '") + c + "'");
            if (static_cast<std::uint32_t>(v) >= modulus) {
                throw ParseError("value " + std::to_string(v) + " out of range [0," +
                                 std::to_string(modulus) + ")");
            }
            values.push_back(static_cast<std::uint8_t>(v));
        }
    }
    if (values.size() != expect) {
        throw ParseError("expected " + std::to_string(expect) + " values, got " +
                         std::to_string(values.size()));
    }
    return GbfTable(n, k, std::move(values));
}

std::string GbfTable::serialize() const {
    std::ostringstream os;
    os << k_ << ':' << n_ << ':';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << static_cast<int>(values_[i]);
    }
    return os.str();
}

std::vector<BoolTable> components(const GbfTable& f) {
    std::vector<BoolTable> planes;
    planes.reserve(f.level());
    for (int i = 0; i < f.level(); ++i) {
        BoolTable p(f.vars());
        for (std::uint32_t x = 0; x < f.size(); ++x) p.set(x, (f.value(x) >> i) & 1);
        planes.push_back(std::move(p));
    }
    return planes;
}

GbfTable combine(const std::vector<BoolTable>& parts, int k) {
    if (static_cast<int>(parts.size()) != k) {
        throw std::invalid_argument("combine: expected exactly k bit-planes");
    }
    const int n = parts.front().vars();
    for (const auto& p : parts) {
        if (p.vars() != n) throw std::invalid_argument("combine: mismatched variable counts");
    }
    GbfTable f(n, k);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        std::uint8_t v = 0;
        for (int i = 0; i < k; ++i) v |= static_cast<std::uint8_t>(parts[i].get(x)) << i;
        f.set_value(x, v);
    }
    return f;
}

std::pair<GbfTable, GbfTable> regroup(const GbfTable& f, int j) {
    if (j < 1 || j >= f.level()) {
        throw std::invalid_argument("regroup split point must satisfy 1 <= j < k");
    }
    GbfTable low(f.vars(), j);
    GbfTable high(f.vars(), f.level() - j);
    const std::uint8_t mask = static_cast<std::uint8_t>((1u << j) - 1);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        low.set_value(x, f.value(x) & mask);
        high.set_value(x, f.value(x) >> j);
    }
    return {std::move(low), std::move(high)};
}

BoolTable gray_map(const GbfTable& f) {
    if (f.level() < 2) throw std::invalid_argument("gray_map requires k >= 2");
    const int n = f.vars();
    const int k = f.level();
    const int m = n + k - 1;
    BoolTable image(m);
    const std::uint32_t low_mask = (std::uint32_t{1} << (k - 1)) - 1;
    for (std::uint32_t idx = 0; idx < image.size(); ++idx) {
        const std::uint32_t x = idx & ((std::uint32_t{1} << n) - 1);
        const std::uint32_t y = idx >> n;
        const std::uint8_t fx = f.value(x);
        const int top = (fx >> (k - 1)) & 1;
        image.set(idx, (top ^ __builtin_parity(y & (fx & low_mask))) != 0);
    }
    return image;
}

}  // namespace gbent
