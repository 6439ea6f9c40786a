#include <doctest.h>

#include <algorithm>
#include <random>

#include "gbent/classify.hpp"
#include "gbent/search.hpp"
#include "gbent/tables.hpp"
#include "gbent/theorems.hpp"
#include "gbent/transform.hpp"

using gbent::BoolTable;
using gbent::GbfTable;

namespace {

BoolTable quad(int n, std::uint32_t a, std::uint32_t b) {
    BoolTable t(n);
    for (std::uint32_t x = 0; x < t.size(); ++x) {
        t.set(x, (((x >> a) & 1) & ((x >> b) & 1)) != 0);
    }
    return t;
}

// a1 + 2 a2 + 4 a3 + 8 a4 from four plane tables.
GbfTable from_planes(const BoolTable& a1, const BoolTable& a2, const BoolTable& a3,
                     const BoolTable& a4) {
    return gbent::combine({a1, a2, a3, a4}, 4);
}

// f = 4 x_n + 8 b(x') with b bent on the first n-1 variables: gbent for odd n.
GbfTable odd_lift(int n, const BoolTable& small_bent) {
    GbfTable f(n, 4);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        const bool top = small_bent.get(x & ((1u << (n - 1)) - 1));
        const bool low = (x >> (n - 1)) & 1;
        f.set_value(x, static_cast<std::uint8_t>(4 * low + 8 * top));
    }
    return f;
}

}  // namespace

TEST_CASE("component spectra") {
    {
        const GbfTable f = GbfTable::parse("2:2:0,1,1,2");
        const auto cs = gbent::component_spectra(f);
        REQUIRE(cs.by_mask.size() == 2);
        const auto planes = gbent::components(f);
        CHECK(cs.by_mask[0] == gbent::wht(planes[1]));
        CHECK(cs.by_mask[1] == gbent::wht(planes[0] ^ planes[1]));
    }
    {
        // Top-plane table: every combination collapses to the same spectrum.
        BoolTable b = quad(3, 0, 1);
        const GbfTable f = gbent::sparse_gbent(BoolTable(3), b, 4);
        const auto cs = gbent::component_spectra(f);
        for (const auto& s : cs.by_mask) CHECK(s == gbent::wht(b));
    }
    CHECK_THROWS_AS(gbent::component_spectra(GbfTable(2, 1)), std::invalid_argument);
}

TEST_CASE("check_k2") {
    {
        // a1 = x1, a2 = x1x2: both a2 and a1^a2 bent.
        const GbfTable f = gbent::combine({BoolTable::linear(2, 1), quad(2, 0, 1)}, 2);
        const auto v = gbent::check_k2(f);
        CHECK(v.holds);
        CHECK(gbent::is_gbent(f));
        CHECK(v.detail.size() == 4);
    }
    {
        const auto v = gbent::check_k2(GbfTable(2, 2));
        CHECK_FALSE(v.holds);
        CHECK(v.failure.has_value());
    }
    CHECK_THROWS_AS(gbent::check_k2(GbfTable(2, 3)), std::invalid_argument);

    // Exhaustive agreement over GB_2^4, including the Gray/autocorrelation
    // formulation asserted inside the checker.
    for (std::uint64_t i = 0; i < gbent::exhaustive_span(2, 2); ++i) {
        const GbfTable f = gbent::exhaustive_candidate(2, 2, i);
        CHECK(gbent::check_k2(f).holds == gbent::is_gbent(f));
    }
    // Odd n reduces to bentness of the Gray image.
    for (std::uint64_t i = 0; i < gbent::exhaustive_span(1, 2); ++i) {
        const GbfTable f = gbent::exhaustive_candidate(1, 2, i);
        CHECK(gbent::check_k2(f).holds == gbent::is_gbent(f));
    }
}

TEST_CASE("check_k3") {
    {
        const GbfTable f = gbent::sparse_gbent(BoolTable(2), quad(2, 0, 1), 3);
        CHECK(gbent::check_k3(f).holds);
    }
    {
        const auto v = gbent::check_k3(GbfTable::parse("3:3:01234567"));
        CHECK_FALSE(v.holds);
        CHECK_FALSE(gbent::is_gbent(GbfTable::parse("3:3:01234567")));
    }
    CHECK_THROWS_AS(gbent::check_k3(GbfTable(2, 2)), std::invalid_argument);

    // Odd-n sampling agreement.
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 300; ++rep) {
        const GbfTable f = gbent::random_gbf(3, 3, rng());
        CHECK(gbent::check_k3(f).holds == gbent::is_gbent(f));
    }
}

TEST_CASE("check_k4_gbent on fixed witnesses") {
    {
        const GbfTable f = gbent::sparse_gbent(BoolTable(2), quad(2, 0, 1), 4);
        CHECK(gbent::check_k4_gbent(f).holds);
    }
    {
        // a1 affine with a4 and a1^a4 bent.
        const GbfTable f = gbent::sparse_gbent(BoolTable::linear(2, 3), quad(2, 0, 1), 4,
                                               /*strict=*/true);
        CHECK(gbent::check_k4_gbent(f).holds);
        CHECK(gbent::is_gbent(f));
    }
    {
        // All eight component combinations bent, yet not gbent: bentness of
        // the components is necessary but not sufficient.
        const GbfTable f = GbfTable::parse("4:2:0,1,2,11");
        CHECK(gbent::components_bent_necessary(f).holds);
        CHECK_FALSE(gbent::is_gbent(f));
        CHECK_FALSE(gbent::check_k4_gbent(f).holds);
        CHECK_FALSE(gbent::check_k4_z4(f).holds);
    }
    {
        // a2 the complement of a1 and a3 = 0 forces the spectra into
        // (A,-B,A,-B,B,-A,B,-A); the product identities then hold whenever
        // a1 ^ a4 is bent, so this family is gbent.
        const BoolTable a1 = BoolTable::linear(4, 1);
        const BoolTable a4 = quad(4, 0, 1) ^ quad(4, 2, 3);
        const GbfTable f = from_planes(a1, ~a1, BoolTable(4), a4);
        CHECK(gbent::components_bent_necessary(f).holds);
        CHECK(gbent::is_gbent(f));
        CHECK(gbent::check_k4_gbent(f).holds);
        CHECK(gbent::check_k4_z4(f).holds);
    }
    CHECK_THROWS_AS(gbent::check_k4_gbent(GbfTable(2, 3)), std::invalid_argument);
}

TEST_CASE("check_k4_z4 tracks the spectral truth") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 200; ++rep) {
        const GbfTable f = gbent::random_gbf(2, 4, rng());
        CHECK(gbent::check_k4_z4(f).holds == gbent::is_gbent(f));
    }
    // Odd n: gbent lifts and random negatives.
    const GbfTable lift = odd_lift(3, quad(2, 0, 1));
    REQUIRE(gbent::is_gbent(lift));
    CHECK(gbent::check_k4_z4(lift).holds);
    CHECK(gbent::check_k4_gbent(lift).holds);
    for (int rep = 0; rep < 200; ++rep) {
        const GbfTable f = gbent::random_gbf(3, 4, rng());
        CHECK(gbent::check_k4_z4(f).holds == gbent::is_gbent(f));
        CHECK(gbent::check_k4_gbent(f).holds == gbent::is_gbent(f));
    }
}

TEST_CASE("check_k4_gsemibent") {
    {
        // a4 and a1^a4 semibent with matching moduli: a1 constant works.
        const BoolTable a4 = quad(3, 0, 1);
        const GbfTable f = gbent::sparse_gbent(BoolTable::linear(3, 0, true), a4, 4);
        CHECK(gbent::check_k4_gsemibent(f).holds);
        CHECK(gbent::plateau_level(f).plateaued(1));
    }
    {
        const GbfTable f = gbent::sparse_gbent(BoolTable(3), quad(3, 0, 1), 4);
        CHECK(gbent::check_k4_gsemibent(f).holds);
    }
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 150; ++rep) {
        const GbfTable f = gbent::random_gbf(2, 4, rng());
        CHECK(gbent::check_k4_gsemibent(f).holds == gbent::plateau_level(f).plateaued(2));
    }
}

TEST_CASE("check_inductive") {
    {
        // g = 0 with h gbent one level down satisfies (ii) immediately.
        const GbfTable h = GbfTable::parse("2:2:0,0,0,2");
        GbfTable f(2, 3);
        for (std::uint32_t x = 0; x < 4; ++x) {
            f.set_value(x, static_cast<std::uint8_t>(2 * h.value(x)));
        }
        CHECK(gbent::check_inductive(f).holds);
        CHECK(gbent::is_gbent(f));
    }
    // k = 2 recovers the bent-components form at even n.
    for (std::uint64_t i = 0; i < gbent::exhaustive_span(2, 2); ++i) {
        const GbfTable f = gbent::exhaustive_candidate(2, 2, i);
        CHECK(gbent::check_inductive(f).holds == gbent::check_k2(f).holds);
    }
    // Odd n: (ii) implies gbent (never the converse asserted).
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 300; ++rep) {
        const GbfTable f = gbent::random_gbf(3, 3, rng());
        if (gbent::check_inductive(f).holds) CHECK(gbent::is_gbent(f));
    }
    CHECK_THROWS_AS(gbent::check_inductive(GbfTable(2, 1)), std::invalid_argument);
}

TEST_CASE("components_bent_necessary") {
    const GbfTable zero(2, 4);
    CHECK_FALSE(gbent::components_bent_necessary(zero).holds);
    CHECK_THROWS_AS(gbent::components_bent_necessary(GbfTable(3, 4)), std::invalid_argument);
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 200; ++rep) {
        const GbfTable f = gbent::random_gbf(2, 3, rng());
        if (gbent::is_gbent(f)) CHECK(gbent::components_bent_necessary(f).holds);
    }
}

TEST_CASE("walsh decomposition identity") {
    std::mt19937_64 rng(14);
    for (int k = 2; k <= 4; ++k) {
        for (int rep = 0; rep < 30; ++rep) {
            const GbfTable f = gbent::random_gbf(3, k, rng());
            CHECK(gbent::verify_walsh_decomposition_all(f));
        }
    }
    // Single-point form agrees.
    const GbfTable f = gbent::random_gbf(2, 4, 5);
    for (std::uint32_t u = 0; u < 4; ++u) CHECK(gbent::verify_walsh_decomposition(f, u));
    CHECK_THROWS_AS(gbent::verify_walsh_decomposition(GbfTable(2, 5), 0), std::invalid_argument);
}

TEST_CASE("recursive split identity") {
    std::mt19937_64 rng(15);
    for (int k = 2; k <= 5; ++k) {
        for (int rep = 0; rep < 25; ++rep) {
            const GbfTable f = gbent::random_gbf(3, k, rng());
            CHECK(gbent::verify_recursive_split_all(f));
        }
    }
    const GbfTable f = gbent::random_gbf(2, 3, 6);
    for (std::uint32_t u = 0; u < 4; ++u) CHECK(gbent::verify_recursive_split(f, u));
    CHECK_THROWS_AS(gbent::verify_recursive_split(GbfTable(2, 1), 0), std::invalid_argument);
}

TEST_CASE("gray image transform identity") {
    std::mt19937_64 rng(16);
    for (int k = 2; k <= 4; ++k) {
        for (int rep = 0; rep < 20; ++rep) {
            const GbfTable f = gbent::random_gbf(3, k, rng());
            CHECK(gbent::verify_gray_wht_all(f));
        }
    }
    // Spelled-out k = 2 case: W_F(u, v1) = W_{a2}(u) + (-1)^{v1} W_{a1^a2}(u).
    const GbfTable f = GbfTable::parse("2:2:0,3,1,2");
    const auto planes = gbent::components(f);
    const auto w2 = gbent::wht(planes[1]);
    const auto w12 = gbent::wht(planes[0] ^ planes[1]);
    const auto wf = gbent::wht(gbent::gray_map(f));
    for (std::uint32_t u = 0; u < 4; ++u) {
        CHECK(wf[u] == w2[u] + w12[u]);
        CHECK(wf[u | 4] == w2[u] - w12[u]);
        CHECK(gbent::verify_gray_wht(f, u, 0));
        CHECK(gbent::verify_gray_wht(f, u, 1));
    }
}

TEST_CASE("gray classification of the fixed counterexamples") {
    {
        const auto c = gbent::gray_classify(GbfTable::parse("3:3:01234567"));
        CHECK(c.is_semibent());
        const auto ws = gbent::wht(gbent::gray_map(GbfTable::parse("3:3:01234567")));
        std::int64_t max_abs = 0;
        for (std::uint32_t u = 0; u < ws.size(); ++u) {
            max_abs = std::max<std::int64_t>(max_abs, std::abs(ws[u]));
        }
        CHECK(max_abs == 8);
    }
    {
        GbfTable f(4, 4);
        for (std::uint32_t x = 0; x < 16; ++x) {
            const std::uint32_t v =
                (x & 1) + 2 * ((x >> 1) & 1) + 4 + 8 * (((x >> 2) ^ (x >> 3)) & 1);
            f.set_value(x, static_cast<std::uint8_t>(v));
        }
        CHECK(gbent::gray_classify(f).plateaued(3));
        CHECK_FALSE(gbent::is_gbent(f));
    }
    {
        // Gbent at k = 2, even n: semibent image.
        const auto c = gbent::gray_classify(GbfTable::parse("2:2:0,0,0,2"));
        CHECK(c.is_semibent());
    }
}

TEST_CASE("no theorem discrepancies on sampled functions") {
    std::mt19937_64 rng(18);
    for (int k = 2; k <= 4; ++k) {
        for (int rep = 0; rep < 60; ++rep) {
            CHECK_FALSE(gbent::theorem_discrepancy(gbent::random_gbf(2, k, rng())));
            CHECK_FALSE(gbent::theorem_discrepancy(gbent::random_gbf(3, k, rng())));
            CHECK_FALSE(gbent::theorem_discrepancy(gbent::random_gbf(4, k, rng())));
        }
    }
    // Structured gbent witnesses exercise the positive side at n = 4.
    std::mt19937_64 prng(19);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<std::uint32_t> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), prng);
        BoolTable h(2);
        for (std::uint32_t y = 0; y < 4; ++y) h.set(y, prng() & 1);
        const BoolTable a4 = gbent::mm_bent(2, perm, h);
        const BoolTable a1 = BoolTable::linear(4, static_cast<std::uint32_t>(prng() & 15));
        for (int k = 2; k <= 4; ++k) {
            const GbfTable f = gbent::sparse_gbent(a1, a4, k);
            CHECK(gbent::is_gbent(f));
            CHECK_FALSE(gbent::theorem_discrepancy(f));
        }
    }
}
