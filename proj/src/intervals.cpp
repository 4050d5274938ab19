#include "hecke/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/primes.hpp"
#include "hecke/voronoi.hpp"

namespace hecke {

double psi(std::uint64_t N) {
    if (N == 0) throw Error(ErrorKind::usage, "psi needs N >= 1");
    double total = 0.0;
    for (std::uint64_t d : divisors_of(N)) {
        double dd = static_cast<double>(d);
        total += std::log(2.0 * dd) / std::sqrt(dd);
    }
    return total;
}

double c_N(std::uint64_t N, double C, double psi_exponent) {
    if (C <= 0.0) throw Error(ErrorKind::usage, "window constant C must be positive");
    return C * std::sqrt(static_cast<double>(N)) * std::pow(psi(N), psi_exponent);
}

WindowCounts window_counts(const EigenForm& f, double x, double h) {
    if (h < 0.0) throw Error(ErrorKind::usage, "window length must be >= 0");
    if (x + h > static_cast<double>(f.bound()))
        throw Error(ErrorKind::usage, "window exceeds coefficient table");
    WindowCounts c;
    std::uint64_t first = static_cast<std::uint64_t>(std::floor(x)) + 1;
    std::uint64_t last = static_cast<std::uint64_t>(std::floor(x + h));
    for (std::uint64_t n = first; n <= last; ++n) {
        if (!f.coprime_to_level(n)) continue;
        int s = f.sign_a(n);
        if (s > 0) ++c.plus;
        else if (s < 0) ++c.minus;
    }
    return c;
}

std::optional<std::array<TriplePoint, 3>> alternating_triple(const EigenForm& f, double x,
                                                             double cn,
                                                             double threshold_scale) {
    if (cn <= 0.0) return std::nullopt;  // empty windows
    const double y = x + cn * std::sqrt(x);
    if (y + cn * std::sqrt(y) > static_cast<double>(f.bound()))
        throw Error(ErrorKind::usage, "triple search exceeds coefficient table");

    Extrema first = find_extrema(f, x, cn);
    Extrema second = find_extrema(f, y, cn);

    const double threshold =
        threshold_scale * std::pow(static_cast<double>(f.level()) * x, 0.25);

    std::vector<TriplePoint> candidates = {{first.x_max, first.s_max},
                                           {first.x_min, first.s_min},
                                           {second.x_max, second.s_max},
                                           {second.x_min, second.s_min}};
    std::sort(candidates.begin(), candidates.end(),
              [](const TriplePoint& a, const TriplePoint& b) { return a.x < b.x; });

    auto qualifies = [&](const TriplePoint& p) { return std::fabs(p.s_star) >= threshold; };
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            for (std::size_t k = j + 1; k < candidates.size(); ++k) {
                const TriplePoint& a = candidates[i];
                const TriplePoint& b = candidates[j];
                const TriplePoint& c = candidates[k];
                if (a.x >= b.x || b.x >= c.x) continue;
                if (!qualifies(a) || !qualifies(b) || !qualifies(c)) continue;
                int sa = a.s_star > 0 ? 1 : -1;
                int sb = b.s_star > 0 ? 1 : -1;
                int sc = c.s_star > 0 ? 1 : -1;
                if (sa != sb && sb != sc) return std::array<TriplePoint, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

IntervalReport verify_short_interval(const EigenForm& f, double x, double eps, double C,
                                     double x_floor) {
    IntervalReport r;
    r.x = x;
    r.h = c_N(f.level(), C) * std::sqrt(x);
    r.threshold = std::pow(static_cast<double>(f.level()) * x, 0.25 - eps);
    r.below_floor = x < x_floor;
    WindowCounts counts = window_counts(f, x, r.h);
    r.plus = counts.plus;
    r.minus = counts.minus;
    r.pass = static_cast<double>(std::min(r.plus, r.minus)) >= r.threshold;
    return r;
}

std::string interval_report_json(const IntervalReport& report) {
    auto fmt12 = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    std::ostringstream os;
    os << "{\"x\":" << fmt12(report.x) << ",\"h\":" << fmt12(report.h)
       << ",\"plus\":" << report.plus << ",\"minus\":" << report.minus
       << ",\"threshold\":" << fmt12(report.threshold)
       << ",\"pass\":" << (report.pass ? "true" : "false") << ",\"triple\":";
    if (report.triple) {
        os << '[' << (*report.triple)[0].x << ',' << (*report.triple)[1].x << ','
           << (*report.triple)[2].x << ']';
    } else {
        os << "null";
    }
    os << '}';
    return os.str();
}

}  // namespace hecke
