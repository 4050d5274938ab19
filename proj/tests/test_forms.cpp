#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/forms.hpp"
#include "hecke/primes.hpp"

using hecke::BigInt;
using hecke::EigenForm;
using hecke::Error;
using hecke::ErrorKind;

namespace {

// Independent point-count oracle: enumerate all (x, y) in F_p^2 directly.
long long brute_force_ap(const hecke::WeierstrassCoeffs& c, long long p) {
    auto md = [p](long long v) { return ((v % p) + p) % p; };
    long long affine = 0, singular_on_curve = 0;
    for (long long x = 0; x < p; ++x) {
        for (long long y = 0; y < p; ++y) {
            long long lhs = md(y * y + c.a1 * x * y + c.a3 * y);
            long long rhs = md(x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
            if (lhs != rhs) continue;
            ++affine;
            long long dy = md(2 * y + c.a1 * x + c.a3);
            long long dx = md(c.a1 * y - (3 * x * x + 2 * c.a2 * x + c.a4));
            if (dy == 0 && dx == 0) ++singular_on_curve;
        }
    }
    if (singular_on_curve == 0) return p + 1 - (affine + 1);  // good reduction
    return p - (affine - singular_on_curve + 1);              // multiplicative
}

const hecke::WeierstrassCoeffs kCurve11{0, -1, 1, -10, -20};

EigenForm form_from_text(const std::string& text) {
    std::istringstream is(text);
    return hecke::read_coefficients(is, "inline");
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/hecke_test_") + name;
}

}  // namespace

TEST_CASE("from_level1 basic values and errors") {
    EigenForm f = hecke::from_level1(12, 10);
    CHECK(f.a(1) == BigInt(1));
    CHECK(f.a(2) == BigInt(-24));
    CHECK(f.bound() == 10);
    CHECK(f.level() == 1);
    CHECK_THROWS_AS(hecke::from_level1(14, 10), Error);
    CHECK_THROWS_AS(f.a(11), Error);  // outside table
}

TEST_CASE("elliptic a(p) agrees with the exhaustive oracle for p <= 200") {
    EigenForm f = hecke::from_elliptic_curve(kCurve11, 11, 200);
    for (std::uint64_t p : hecke::primes_upto(200)) {
        long long expect = brute_force_ap(kCurve11, static_cast<long long>(p));
        CHECK(f.a(p) == BigInt(expect));
    }
    CHECK(f.a(2) == BigInt(-2));
    CHECK(f.a(3) == BigInt(-1));
    CHECK(f.a(19) == BigInt(0));  // supersingular prime in range
}

TEST_CASE("level prime of the conductor-11 curve") {
    EigenForm f = hecke::from_elliptic_curve(kCurve11, 11, 150);
    bool unit = f.a(11) == BigInt(1) || f.a(11) == BigInt(-1);
    CHECK(unit);
    CHECK(std::fabs(std::fabs(f.lambda(11).value) - 1.0 / std::sqrt(11.0)) < 1e-12);
    CHECK(f.a(121) == f.a(11) * f.a(11));
    CHECK(hecke::epsilon(f, 11) == f.a(11).sign());
    CHECK_THROWS_AS(hecke::epsilon(f, 3), Error);
}

TEST_CASE("a second curve: conductor 37, y^2 + y = x^3 - x") {
    hecke::WeierstrassCoeffs c37{0, 0, 1, -1, 0};
    EigenForm f = hecke::from_elliptic_curve(c37, 37, 200);
    for (std::uint64_t p : hecke::primes_upto(200)) {
        CHECK(f.a(p) == BigInt(brute_force_ap(c37, static_cast<long long>(p))));
    }
    CHECK(hecke::epsilon(f, 37) == f.a(37).sign());
    CHECK(std::fabs(std::fabs(f.lambda(37).value) - 1.0 / std::sqrt(37.0)) < 1e-12);
}

TEST_CASE("a two-prime level: conductor 15, y^2 + xy + y = x^3 + x^2 - 10x - 10") {
    hecke::WeierstrassCoeffs c15{1, 1, 1, -10, -10};
    EigenForm f = hecke::from_elliptic_curve(c15, 15, 300);
    for (std::uint64_t p : hecke::primes_upto(300)) {
        CHECK(f.a(p) == BigInt(brute_force_ap(c15, static_cast<long long>(p))));
    }
    // multiplicative reduction of both signs across the level primes
    CHECK(hecke::epsilon(f, 3) == -1);
    CHECK(hecke::epsilon(f, 5) == 1);
    CHECK(f.a(15) == f.a(3) * f.a(5));
    CHECK(f.a(7) == BigInt(0));  // supersingular
    CHECK(f.coprime_to_level(7));
    CHECK(!f.coprime_to_level(10));
}

TEST_CASE("additive reduction is rejected as an invalid level") {
    // y^2 = x^3 - 3: additive reduction at 3; claiming conductor 3 must fail.
    hecke::WeierstrassCoeffs bad{0, 0, 0, 0, -3};
    CHECK_THROWS_AS(hecke::from_elliptic_curve(bad, 3, 50), Error);
    try {
        hecke::from_elliptic_curve(bad, 3, 50);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_level);
    }
}

TEST_CASE("hecke_extend reproduces known prime-power and composite values") {
    EigenForm f = hecke::from_level1(12, 150);
    CHECK(f.a(4) == BigInt(-24) * BigInt(-24) - BigInt::pow(2, 11));  // -1472
    CHECK(f.a(4) == BigInt(-1472));
    CHECK(f.a(6) == f.a(2) * f.a(3));
    CHECK(f.a(6) == BigInt(-6048));

    std::vector<std::pair<std::uint64_t, BigInt>> on_primes;
    for (std::uint64_t p : hecke::primes_upto(150)) on_primes.emplace_back(p, f.a(p));
    auto table = hecke::hecke_extend(on_primes, 12, 1, 150);
    for (std::uint64_t n = 1; n <= 150; ++n) CHECK(table[n] == f.a(n));

    on_primes.pop_back();  // drop the largest prime
    CHECK_THROWS_AS(hecke::hecke_extend(on_primes, 12, 1, 150), Error);
}

TEST_CASE("multiplicativity and the good-prime recursion hold across the table") {
    EigenForm f = hecke::from_level1(12, 3000);
    for (std::uint64_t m = 2; m <= 54; ++m) {
        for (std::uint64_t n = m + 1; m * n <= 3000; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(f.a(m * n) == f.a(m) * f.a(n));
        }
    }
    for (std::uint64_t p : hecke::primes_upto(54)) {
        BigInt pk = BigInt::pow(p, 11);
        for (std::uint64_t pv = p * p; pv <= 3000; pv *= p)
            CHECK(f.a(pv) == f.a(p) * f.a(pv / p) - pk * f.a(pv / (p * p)));
    }
}

TEST_CASE("lambda values and exact signs") {
    EigenForm f = hecke::from_level1(12, 2000);
    CHECK(f.lambda(1).value == 1.0);
    CHECK(f.lambda(2).value == doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-14));
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        hecke::Eigenvalue ev = f.lambda(n);
        CHECK(ev.sign == f.a(n).sign());
        if (ev.sign > 0) CHECK(ev.value > 0.0);
        if (ev.sign < 0) CHECK(ev.value < 0.0);
        if (ev.sign == 0) CHECK(ev.value == 0.0);
    }
}

TEST_CASE("verify_deligne clean cases and a constructed violation") {
    EigenForm f = hecke::from_level1(12, 10000);
    CHECK(!hecke::verify_deligne(f, 10000).has_value());

    for (int k : {16, 18, 20, 22, 26}) {
        EigenForm g = hecke::from_level1(k, 2000);
        CHECK(!hecke::verify_deligne(g, 2000).has_value());
    }

    EigenForm bad = form_from_text("k=2 N=1\n1 1\n2 5\n");
    auto counter = hecke::verify_deligne(bad, 2);
    REQUIRE(counter.has_value());
    CHECK(*counter == 2);  // 25 > 4 * 2
}

TEST_CASE("least_negative_prime") {
    CHECK(hecke::least_negative_prime(hecke::from_level1(12, 50)) == 2);
    CHECK(hecke::least_negative_prime(hecke::from_elliptic_curve(kCurve11, 11, 50)) == 2);

    EigenForm art = form_from_text("k=2 N=1\n1 1\n2 1\n3 -1\n");
    CHECK(hecke::least_negative_prime(art) == 3);

    EigenForm pos = form_from_text("k=2 N=1\n1 1\n2 1\n3 1\n");
    CHECK_THROWS_AS(hecke::least_negative_prime(pos), Error);
}

TEST_CASE("epsilon usage errors") {
    EigenForm f = hecke::from_level1(12, 30);
    CHECK_THROWS_AS(hecke::epsilon(f, 2), Error);  // N = 1 has no level primes
}

TEST_CASE("coefficient file round-trip is bit-exact") {
    EigenForm f = hecke::from_elliptic_curve(kCurve11, 11, 80);
    std::string path = temp_path("roundtrip.txt");
    hecke::save_coefficients(f, path);
    EigenForm g = hecke::from_file(path);
    CHECK(g.weight() == f.weight());
    CHECK(g.level() == f.level());
    REQUIRE(g.bound() == f.bound());
    for (std::uint64_t n = 1; n <= f.bound(); ++n) CHECK(g.a(n) == f.a(n));
    std::remove(path.c_str());
}

TEST_CASE("loader validates the documented failure modes") {
    // missing a(1)
    CHECK_THROWS_AS(form_from_text("k=12 N=1\n2 -24\n"), Error);
    // a(6) != a(2) a(3)
    CHECK_THROWS_AS(
        form_from_text("k=2 N=1\n1 1\n2 -1\n3 2\n4 1\n5 3\n6 100\n"), Error);
    // level-prime violation: N = 2, weight 2 needs a(2)^2 = 1
    CHECK_THROWS_AS(form_from_text("k=2 N=2\n1 1\n2 3\n"), Error);
    // malformed header and body
    CHECK_THROWS_AS(form_from_text("weight 12\n1 1\n"), Error);
    CHECK_THROWS_AS(form_from_text("k=12 N=1\n1 one\n"), Error);
    // non-contiguous indices
    CHECK_THROWS_AS(form_from_text("k=12 N=1\n1 1\n3 252\n"), Error);
    // comments and blank lines are fine
    EigenForm ok = form_from_text("# tau\nk=12 N=1\n\n1 1\n2 -24 # tau(2)\n");
    CHECK(ok.a(2) == BigInt(-24));
    try {
        form_from_text("k=12 N=1\n2 -24\n");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::load);
    }
}
