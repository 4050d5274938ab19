#include <doctest.h>

#include <random>

#include "hecke/errors.hpp"
#include "hecke/reference.hpp"
#include "hecke/series.hpp"

using hecke::BigInt;
using hecke::TruncatedSeries;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t L) {
    std::uniform_int_distribution<long long> dist(-50, 50);
    TruncatedSeries s(L);
    for (std::size_t i = 0; i < L; ++i) s[i] = BigInt(dist(rng));
    return s;
}

}  // namespace

TEST_CASE("mul: difference of squares and identity") {
    TruncatedSeries a{BigInt(1), BigInt(1), BigInt(0)};   // 1 + q
    TruncatedSeries b{BigInt(1), BigInt(-1), BigInt(0)};  // 1 - q
    TruncatedSeries p = mul(a, b);
    CHECK(p[0] == BigInt(1));
    CHECK(p[1] == BigInt(0));
    CHECK(p[2] == BigInt(-1));

    TruncatedSeries one(3);
    one[0] = BigInt(1);
    TruncatedSeries q = mul(one, a);
    for (std::size_t i = 0; i < 3; ++i) CHECK(q[i] == a[i]);
}

TEST_CASE("mul: (1+q+q^2+q^3)^2 has coefficient 4 at q^3") {
    TruncatedSeries s(4);
    for (std::size_t i = 0; i < 4; ++i) s[i] = BigInt(1);
    CHECK(mul(s, s)[3] == BigInt(4));
}

TEST_CASE("mul rejects mismatched lengths") {
    TruncatedSeries a(3), b(4);
    CHECK_THROWS_AS(mul(a, b), hecke::Error);
}

TEST_CASE("ring laws on random truncations") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t L = 1 + rng() % 24;
        TruncatedSeries a = random_series(rng, L);
        TruncatedSeries b = random_series(rng, L);
        TruncatedSeries c = random_series(rng, L);
        TruncatedSeries ab = mul(a, b);
        TruncatedSeries ba = mul(b, a);
        TruncatedSeries l = mul(ab, c);
        TruncatedSeries r = mul(a, mul(b, c));
        for (std::size_t i = 0; i < L; ++i) {
            CHECK(ab[i] == ba[i]);
            CHECK(l[i] == r[i]);
        }
    }
}

TEST_CASE("eta_power_24 matches stated low-order coefficients") {
    CHECK(hecke::eta_power_24(2)[1] == BigInt(1));
    CHECK(hecke::eta_power_24(3)[2] == BigInt(-24));
    CHECK(hecke::eta_power_24(4)[3] == BigInt(252));
    CHECK(hecke::eta_power_24(5)[0] == BigInt(0));
    CHECK_THROWS_AS(hecke::eta_power_24(1), hecke::Error);
}

TEST_CASE("eta_power_24 agrees with the naive factor-by-factor oracle to L=2000") {
    const std::size_t L = 2000;
    TruncatedSeries fast = hecke::eta_power_24(L);
    TruncatedSeries slow = hecke::naive_eta_power_24(L);
    for (std::size_t i = 0; i < L; ++i) {
        REQUIRE(fast[i] == slow[i]);
    }
}

TEST_CASE("eisenstein series against divisor-sum oracle") {
    TruncatedSeries e4 = hecke::eisenstein(4, 60);
    TruncatedSeries e6 = hecke::eisenstein(6, 60);
    CHECK(e4[0] == BigInt(1));
    CHECK(e6[0] == BigInt(1));
    CHECK(e4[1] == BigInt(240));
    CHECK(e6[1] == BigInt(-504));
    for (std::uint64_t n = 1; n < 60; ++n) {
        CHECK(e4[n] == BigInt(240) * BigInt(static_cast<long long>(hecke::naive_sigma(n, 3))));
        CHECK(e6[n] == BigInt(-504) * BigInt(static_cast<long long>(hecke::naive_sigma(n, 5))));
    }
    CHECK_THROWS_AS(hecke::eisenstein(8, 10), hecke::Error);
}

TEST_CASE("level1_eigenform: weight 12 is the eta power") {
    TruncatedSeries d = hecke::level1_eigenform(12, 200);
    TruncatedSeries e = hecke::eta_power_24(200);
    for (std::size_t i = 0; i < 200; ++i) CHECK(d[i] == e[i]);
}

TEST_CASE("level1_eigenform: normalization and the weight-16 spot value") {
    for (int k : {12, 16, 18, 20, 22, 26}) {
        TruncatedSeries f = hecke::level1_eigenform(k, 24);
        CHECK(f[0] == BigInt(0));  // cusp form
        CHECK(f[1] == BigInt(1));  // normalized
    }
    // coefficient of q^2 in Delta*E4: 1*240 + (-24)*1
    CHECK(hecke::level1_eigenform(16, 8)[2] == BigInt(216));
}

TEST_CASE("level1_eigenform rejects weights outside the one-dimensional list") {
    CHECK_THROWS_AS(hecke::level1_eigenform(14, 10), hecke::Error);
    CHECK_THROWS_AS(hecke::level1_eigenform(24, 10), hecke::Error);
    try {
        hecke::level1_eigenform(14, 10);
    } catch (const hecke::Error& e) {
        CHECK(e.kind() == hecke::ErrorKind::unsupported_weight);
    }
}
