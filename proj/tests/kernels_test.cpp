#include <doctest.h>

#include <random>
#include <vector>

#include "gbent/kernels.hpp"

namespace k = gbent::kernels;

TEST_CASE("scalar butterfly pair") {
    std::vector<std::int64_t> a = {1, 2, 3};
    std::vector<std::int64_t> b = {10, -20, 5};
    k::butterfly_pair_scalar(a.data(), b.data(), 3);
    CHECK(a == std::vector<std::int64_t>{11, -18, 8});
    CHECK(b == std::vector<std::int64_t>{-9, 22, -2});
}

TEST_CASE("avx2 kernel matches the scalar reference") {
    if (!k::avx2_available()) return;
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t len = rng() % 70;
        std::vector<std::int64_t> a(len), b(len);
        for (auto& x : a) x = static_cast<std::int64_t>(rng()) >> 24;
        for (auto& x : b) x = static_cast<std::int64_t>(rng()) >> 24;
        auto a2 = a, b2 = b;
        k::butterfly_pair_scalar(a.data(), b.data(), len);
        k::butterfly_pair_avx2(a2.data(), b2.data(), len);
        CHECK(a == a2);
        CHECK(b == b2);
    }
}

TEST_CASE("full transforms agree between kernels") {
    if (!k::avx2_available()) return;
    std::mt19937_64 rng(7);
    for (const std::size_t row_len : {std::size_t{1}, std::size_t{2}, std::size_t{4},
                                      std::size_t{8}, std::size_t{16}, std::size_t{32}}) {
        for (const int stages : {0, 1, 3, 6}) {
            std::vector<std::int64_t> data((std::size_t{1} << stages) * row_len);
            for (auto& x : data) x = static_cast<std::int64_t>(rng() % 4096) - 2048;
            auto copy = data;
            k::hadamard_rows_with(k::Isa::scalar, data.data(), stages, row_len);
            k::hadamard_rows_with(k::Isa::avx2, copy.data(), stages, row_len);
            CHECK(data == copy);
        }
    }
}

TEST_CASE("transform applied twice scales by the point count") {
    std::mt19937_64 rng(23);
    for (const int stages : {1, 2, 5}) {
        const std::size_t row_len = 4;
        std::vector<std::int64_t> data((std::size_t{1} << stages) * row_len);
        for (auto& x : data) x = static_cast<std::int64_t>(rng() % 200) - 100;
        auto original = data;
        k::hadamard_rows(data.data(), stages, row_len);
        k::hadamard_rows(data.data(), stages, row_len);
        for (std::size_t i = 0; i < data.size(); ++i) {
            CHECK(data[i] == original[i] * (std::int64_t{1} << stages));
        }
    }
}

TEST_CASE("isa dispatch reports a valid kernel") {
    const k::Isa isa = k::active_isa();
    CHECK((isa == k::Isa::scalar || isa == k::Isa::avx2));
    if (isa == k::Isa::avx2) CHECK(k::avx2_available());
    CHECK((std::string(k::isa_name(isa)) == "scalar" || std::string(k::isa_name(isa)) == "avx2"));
}
