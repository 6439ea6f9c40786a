#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gbent/classify.hpp"
#include "gbent/errors.hpp"
#include "gbent/report.hpp"
#include "gbent/search.hpp"
#include "gbent/tables.hpp"

using gbent::BoolTable;
using gbent::GbfTable;
using gbent::SearchMode;
using gbent::SearchPredicate;
using gbent::SearchSpec;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_path(const char* stem) {
    return std::string("/tmp/gbent_test_") + stem + ".jsonl";
}

BoolTable quad(int n, std::uint32_t a, std::uint32_t b) {
    BoolTable t(n);
    for (std::uint32_t x = 0; x < t.size(); ++x) {
        t.set(x, (((x >> a) & 1) & ((x >> b) & 1)) != 0);
    }
    return t;
}

}  // namespace

TEST_CASE("maiorana-mcfarland construction") {
    {
        const std::uint32_t id1[] = {0, 1};
        const BoolTable f = gbent::mm_bent(1, id1, BoolTable(1));
        CHECK(f == quad(2, 0, 1));
        CHECK(gbent::boolean_class(f).is_bent());
    }
    {
        const std::uint32_t id2[] = {0, 1, 2, 3};
        const BoolTable f = gbent::mm_bent(2, id2, BoolTable(2));
        // x1 x3 ^ x2 x4
        CHECK(f == (quad(4, 0, 2) ^ quad(4, 1, 3)));
        const auto s = gbent::wht(f);
        for (std::uint32_t u = 0; u < 16; ++u) CHECK(std::abs(s[u]) == 4);
    }
    {
        std::mt19937_64 rng(44);
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<std::uint32_t> perm = {0, 1, 2, 3};
            std::shuffle(perm.begin(), perm.end(), rng);
            BoolTable h(2);
            for (std::uint32_t y = 0; y < 4; ++y) h.set(y, rng() & 1);
            CHECK(gbent::boolean_class(gbent::mm_bent(2, perm, h)).is_bent());
        }
    }
    const std::uint32_t bad[] = {0, 0};
    CHECK_THROWS_AS(gbent::mm_bent(1, bad, BoolTable(1)), std::invalid_argument);
}

TEST_CASE("sparse construction") {
    const BoolTable bent = quad(2, 0, 1);
    {
        const GbfTable f = gbent::sparse_gbent(BoolTable(2), bent, 4);
        CHECK(f.value(3) == 8);
        CHECK(gbent::is_gbent(f));
    }
    {
        // Strict mode validates the bent pair.
        CHECK_NOTHROW(gbent::sparse_gbent(BoolTable::linear(2, 1), bent, 4, true));
        CHECK_THROWS_AS(gbent::sparse_gbent(bent, bent, 4, true), std::invalid_argument);
        CHECK_THROWS_AS(gbent::sparse_gbent(BoolTable(3), quad(3, 0, 1), 4, true),
                        std::invalid_argument);
    }
    // Middle planes stay zero and odd n never lands gbent.
    std::mt19937_64 rng(50);
    for (int rep = 0; rep < 40; ++rep) {
        BoolTable a1(3), a4(3);
        for (std::uint32_t x = 0; x < 8; ++x) {
            a1.set(x, rng() & 1);
            a4.set(x, rng() & 1);
        }
        const GbfTable f = gbent::sparse_gbent(a1, a4, 4);
        for (std::uint32_t x = 0; x < 8; ++x) CHECK((f.value(x) & 0b0110) == 0);
        CHECK_FALSE(gbent::is_gbent(f));
    }
}

TEST_CASE("random tables are reproducible") {
    const GbfTable a = gbent::random_gbf(4, 3, 12345);
    const GbfTable b = gbent::random_gbf(4, 3, 12345);
    CHECK(a == b);
    CHECK(a != gbent::random_gbf(4, 3, 12346));
    for (std::uint32_t x = 0; x < a.size(); ++x) CHECK(a.value(x) < 8);
}

TEST_CASE("exhaustive enumeration order and span") {
    CHECK(gbent::exhaustive_span(2, 2) == 256);
    CHECK(gbent::exhaustive_candidate(2, 2, 0).values() ==
          std::vector<std::uint8_t>{0, 0, 0, 0});
    // Lexicographic: index 1 increments the last position.
    CHECK(gbent::exhaustive_candidate(2, 2, 1).values() ==
          std::vector<std::uint8_t>{0, 0, 0, 1});
    CHECK(gbent::exhaustive_candidate(2, 2, 255).values() ==
          std::vector<std::uint8_t>{3, 3, 3, 3});
}

TEST_CASE("run_search exhaustive gbent count is frozen") {
    SearchSpec spec;
    spec.n = 2;
    spec.k = 2;
    spec.mode = SearchMode::exhaustive;
    spec.predicate = SearchPredicate::gbent;
    spec.out_path = temp_path("k2");
    const auto summary = gbent::run_search(spec);
    CHECK(summary.tested == 256);
    CHECK(summary.matched == 64);
    CHECK(summary.written == 64);

    // Every emitted record re-verifies from its persisted values.
    std::ifstream in(spec.out_path);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        const auto rec = nlohmann::json::parse(line);
        const GbfTable f = gbent::table_from_json(rec);
        CHECK(gbent::is_gbent(f));
        CHECK(rec.at("classification").at("gbent").get<bool>());
        CHECK(rec.contains("dual"));
        ++lines;
    }
    CHECK(lines == 64);
    std::remove(spec.out_path.c_str());
}

TEST_CASE("exhaustive runs are deterministic and chunk-restartable") {
    SearchSpec spec;
    spec.n = 2;
    spec.k = 3;
    spec.mode = SearchMode::exhaustive;
    spec.predicate = SearchPredicate::gbent;

    spec.out_path = temp_path("full_a");
    gbent::run_search(spec);
    spec.out_path = temp_path("full_b");
    spec.threads = 4;
    gbent::run_search(spec);
    const std::string full = slurp(temp_path("full_a"));
    CHECK(full == slurp(temp_path("full_b")));

    spec.threads = 1;
    spec.out_path = temp_path("lo");
    spec.range = {{0, 2048}};
    gbent::run_search(spec);
    spec.out_path = temp_path("hi");
    spec.range = {{2048, 4096}};
    gbent::run_search(spec);
    CHECK(full == slurp(temp_path("lo")) + slurp(temp_path("hi")));

    for (const char* stem : {"full_a", "full_b", "lo", "hi"}) {
        std::remove(temp_path(stem).c_str());
    }
}

TEST_CASE("search guards and predicates") {
    SearchSpec spec;
    spec.n = 3;
    spec.k = 4;
    spec.mode = SearchMode::exhaustive;
    CHECK_THROWS_AS(gbent::run_search(spec), gbent::InfeasibleError);

    spec.n = 2;
    spec.k = 2;
    spec.predicate = SearchPredicate::theorem_discrepancy;
    CHECK(gbent::run_search(spec).matched == 0);

    spec.predicate = SearchPredicate::plateaued;
    spec.plateau_s = 2;
    const auto plateaued = gbent::run_search(spec);
    CHECK(plateaued.matched > 0);

    spec.mode = SearchMode::random;
    spec.predicate = SearchPredicate::gbent;
    spec.count = 500;
    spec.seed = 9;
    const auto r1 = gbent::run_search(spec);
    const auto r2 = gbent::run_search(spec);
    CHECK(r1.tested == 500);
    CHECK(r1.matched == r2.matched);

    spec.mode = SearchMode::construct;
    spec.family = "sparse";
    spec.n = 4;
    spec.k = 4;
    spec.count = 30;
    const auto c = gbent::run_search(spec);
    CHECK(c.tested == 30);
    CHECK(c.matched == 30);  // the sparse family lands gbent at even n

    spec.family = "nope";
    CHECK_THROWS_AS(gbent::run_search(spec), std::invalid_argument);
}
