#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "hecke/forms.hpp"

namespace hecke {

// Psi(N) = sum_{d|N} d^{-1/2} log(2d).
double psi(std::uint64_t N);

// C_N = C sqrt(N) Psi(N)^exponent (default exponent 3).
double c_N(std::uint64_t N, double C, double psi_exponent = 3.0);

// Sign counts over the half-open window (x, x + h], restricted to n
// coprime to the level; zero eigenvalues land in neither class.
struct WindowCounts {
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
};

WindowCounts window_counts(const EigenForm& f, double x, double h);

struct TriplePoint {
    std::uint64_t x;
    double s_star;
};

// Three points x < x1 < x2 < x3 < x + 3 C_N sqrt(x) with alternating signs
// of S*_f and |S*_f(x_i)| >= threshold_scale * (N x)^{1/4}, found from the
// extrema of two adjacent windows; nullopt when no qualifying triple exists.
std::optional<std::array<TriplePoint, 3>> alternating_triple(const EigenForm& f, double x,
                                                             double cn,
                                                             double threshold_scale = 0.05);

struct IntervalReport {
    double x = 0;
    double h = 0;
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
    double threshold = 0;  // (N x)^{1/4 - eps}
    bool pass = false;
    bool below_floor = false;  // x below the configured onset; informational
    std::optional<std::array<TriplePoint, 3>> triple;
};

// Window (x, x + C_N sqrt(x)] with C_N = c_N(N, C); passes when
// min(plus, minus) >= (N x)^{1/4 - eps}. The onset of the asymptotic
// statement is not effective, so windows with x < x_floor are flagged
// (below_floor) rather than failed.
IntervalReport verify_short_interval(const EigenForm& f, double x, double eps, double C,
                                     double x_floor = 0.0);

// JSON: {"x":..,"h":..,"plus":..,"minus":..,"threshold":..,"pass":..,"triple":[x1,x2,x3]|null}
std::string interval_report_json(const IntervalReport& report);

}  // namespace hecke
