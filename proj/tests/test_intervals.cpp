#include <doctest.h>

#include <cmath>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/forms.hpp"
#include "hecke/intervals.hpp"
#include "hecke/reference.hpp"
#include "hecke/voronoi.hpp"

using hecke::EigenForm;
using hecke::Error;

namespace {

const EigenForm& delta_form() {
    static EigenForm f = hecke::from_level1(12, 120000);
    return f;
}

const EigenForm& curve_form() {
    static EigenForm f = hecke::from_elliptic_curve({0, -1, 1, -10, -20}, 11, 40000);
    return f;
}

}  // namespace

TEST_CASE("psi against direct divisor-sum evaluation") {
    CHECK(hecke::psi(1) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(hecke::psi(2) ==
          doctest::Approx(std::log(2.0) + std::log(4.0) / std::sqrt(2.0)).epsilon(1e-15));
    double n6 = std::log(2.0) + std::log(4.0) / std::sqrt(2.0) +
                std::log(6.0) / std::sqrt(3.0) + std::log(12.0) / std::sqrt(6.0);
    CHECK(hecke::psi(6) == doctest::Approx(n6).epsilon(1e-15));
    CHECK(hecke::psi(6) == doctest::Approx(3.722).epsilon(1e-3));
    CHECK_THROWS_AS(hecke::psi(0), Error);
}

TEST_CASE("c_N formula and monotonicity in C") {
    double l2 = std::log(2.0);
    CHECK(hecke::c_N(1, 1.0) == doctest::Approx(l2 * l2 * l2).epsilon(1e-15));
    CHECK(hecke::c_N(1, 3.0) == doctest::Approx(3.0 * l2 * l2 * l2).epsilon(1e-15));
    CHECK(hecke::c_N(11, 1.0) ==
          doctest::Approx(std::sqrt(11.0) * std::pow(hecke::psi(11), 3.0)).epsilon(1e-12));
    CHECK(hecke::c_N(11, 2.0) > hecke::c_N(11, 1.0));
    // the exponent knob
    CHECK(hecke::c_N(11, 1.0, 2.0) ==
          doctest::Approx(std::sqrt(11.0) * std::pow(hecke::psi(11), 2.0)).epsilon(1e-12));
}

TEST_CASE("window_counts against the naive eta oracle on (100, 110]") {
    const EigenForm& f = delta_form();
    auto counts = hecke::window_counts(f, 100.0, 10.0);
    auto oracle = hecke::naive_eta_power_24(112);
    std::uint64_t plus = 0, minus = 0;
    for (std::uint64_t n = 101; n <= 110; ++n) {
        int s = oracle[n].sign();
        if (s > 0) ++plus;
        if (s < 0) ++minus;
    }
    CHECK(counts.plus == plus);
    CHECK(counts.minus == minus);
    CHECK(counts.plus + counts.minus == 10);  // no vanishing tau here

    auto empty = hecke::window_counts(f, 100.0, 0.0);
    CHECK(empty.plus == 0);
    CHECK(empty.minus == 0);
}

TEST_CASE("window_counts respects the coprimality filter") {
    const EigenForm& g = curve_form();
    // (10, 12] contains 11 and 12; n = 11 is dropped
    auto c = hecke::window_counts(g, 10.0, 2.0);
    CHECK(c.plus + c.minus <= 1);
    auto wide = hecke::window_counts(g, 10.0, 12.0);
    auto left = hecke::window_counts(g, 10.0, 5.0);
    auto right = hecke::window_counts(g, 15.0, 7.0);
    CHECK(wide.plus == left.plus + right.plus);    // additivity
    CHECK(wide.minus == left.minus + right.minus);
}

TEST_CASE("alternating triple on the weight-12 form at x = 10^4") {
    const EigenForm& f = delta_form();
    double cn = hecke::c_N(1, 3.0);
    auto triple = hecke::alternating_triple(f, 10000.0, cn);
    REQUIRE(triple.has_value());
    auto [p1, p2, p3] = *triple;
    CHECK(p1.x < p2.x);
    CHECK(p2.x < p3.x);
    CHECK(p3.x < 10000.0 + 3.0 * cn * 100.0 + 1.0);
    double threshold = 0.05 * std::pow(10000.0, 0.25);
    for (const auto& p : {p1, p2, p3}) CHECK(std::fabs(p.s_star) >= threshold);

    // consecutive differences have opposite signs and exceed twice the threshold
    double d1 = p2.s_star - p1.s_star;
    double d2 = p3.s_star - p2.s_star;
    CHECK((d1 > 0) != (d2 > 0));
    CHECK(std::fabs(d1) >= 2.0 * threshold);
    CHECK(std::fabs(d2) >= 2.0 * threshold);

    // a negative difference forces that many negative eigenvalues in between
    const auto& a = d1 < 0 ? p1 : p2;
    const auto& b = d1 < 0 ? p2 : p3;
    double drop = d1 < 0 ? d1 : d2;
    double max_abs_lambda = 0.0;
    for (std::uint64_t n = a.x + 1; n <= b.x; ++n)
        max_abs_lambda = std::max(max_abs_lambda, std::fabs(f.lambda(n).value));
    auto counts = hecke::window_counts(f, static_cast<double>(a.x),
                                       static_cast<double>(b.x - a.x));
    CHECK(static_cast<double>(counts.minus) >= std::fabs(drop) / max_abs_lambda - 1e-9);
}

TEST_CASE("alternating triple degenerate cases") {
    const EigenForm& f = delta_form();
    CHECK(!hecke::alternating_triple(f, 10000.0, 0.0).has_value());
    // an absurd threshold cannot be met
    CHECK(!hecke::alternating_triple(f, 10000.0, hecke::c_N(1, 3.0), 1e6).has_value());
}

TEST_CASE("alternating triple on the conductor-11 form") {
    const EigenForm& g = curve_form();
    double cn = hecke::c_N(11, 3.0);
    auto triple = hecke::alternating_triple(g, 10000.0, cn, 0.05);
    REQUIRE(triple.has_value());
    double threshold = 0.05 * std::pow(11.0 * 10000.0, 0.25);
    for (const auto& p : *triple) CHECK(std::fabs(p.s_star) >= threshold);
}

TEST_CASE("verify_short_interval at x = 10^5 passes with eps = 0.1, C = 3") {
    const EigenForm& f = delta_form();
    auto r = hecke::verify_short_interval(f, 1e5, 0.1, 3.0);
    CHECK(r.pass);
    CHECK(r.h == doctest::Approx(hecke::c_N(1, 3.0) * std::sqrt(1e5)).epsilon(1e-12));
    CHECK(r.threshold == doctest::Approx(std::pow(1e5, 0.15)).epsilon(1e-12));
    CHECK(static_cast<double>(std::min(r.plus, r.minus)) >= r.threshold);
}

TEST_CASE("eps = 0.25 reduces the threshold to one of each sign") {
    const EigenForm& f = delta_form();
    auto r = hecke::verify_short_interval(f, 10000.0, 0.25, 3.0);
    CHECK(r.threshold == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.pass == (std::min(r.plus, r.minus) >= 1));
}

TEST_CASE("windows below the onset floor are flagged, not failed") {
    const EigenForm& f = delta_form();
    auto r = hecke::verify_short_interval(f, 10000.0, 0.1, 3.0, 1e8);
    CHECK(r.below_floor);
    auto r2 = hecke::verify_short_interval(f, 10000.0, 0.1, 3.0);
    CHECK(!r2.below_floor);
    CHECK(r.pass == r2.pass);  // the flag does not change the verdict
}

TEST_CASE("interval report JSON shape") {
    hecke::IntervalReport r;
    r.x = 100.0;
    r.h = 10.0;
    r.plus = 4;
    r.minus = 5;
    r.threshold = 2.5;
    r.pass = true;
    std::string js = hecke::interval_report_json(r);
    CHECK(js ==
          "{\"x\":100,\"h\":10,\"plus\":4,\"minus\":5,\"threshold\":2.5,"
          "\"pass\":true,\"triple\":null}");
    r.triple = std::array<hecke::TriplePoint, 3>{{{101, 1.0}, {105, -1.0}, {109, 1.5}}};
    CHECK(hecke::interval_report_json(r).find("\"triple\":[101,105,109]") != std::string::npos);
}
