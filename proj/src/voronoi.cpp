#include "hecke/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/parallel.hpp"
#include "hecke/primes.hpp"
#include "hecke/quadrature.hpp"

namespace hecke {

namespace {

constexpr double kPi = std::numbers::pi;

// Kahan-compensated accumulator.
template <typename Real>
struct Compensated {
    Real sum = 0, carry = 0;
    void add(Real v) {
        Real y = v - carry;
        Real t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    Real value() const { return sum; }
};

template <typename Real>
double sum_lambda(const EigenForm& f, double x, bool coprime_only) {
    if (x < 1.0) return 0.0;
    std::uint64_t n_max = static_cast<std::uint64_t>(std::floor(x));
    if (n_max > f.bound())
        throw Error(ErrorKind::usage, "partial sum reaches beyond coefficient table");
    Compensated<Real> acc;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (coprime_only && !f.coprime_to_level(n)) continue;
        if constexpr (std::is_same_v<Real, long double>) {
            acc.add(f.lambda_ext(n));
        } else {
            acc.add(f.lambda(n).value);
        }
    }
    return static_cast<double>(acc.value());
}

}  // namespace

double partial_sum(const EigenForm& f, double x, Precision prec) {
    return prec == Precision::extended ? sum_lambda<long double>(f, x, false)
                                       : sum_lambda<double>(f, x, false);
}

double partial_sum_coprime(const EigenForm& f, double x, Precision prec) {
    return prec == Precision::extended ? sum_lambda<long double>(f, x, true)
                                       : sum_lambda<double>(f, x, true);
}

double moebius_identity(const EigenForm& f, double x, Precision prec) {
    if (x < 1.0) return 0.0;
    double total = 0.0;
    for (std::uint64_t d : divisors_of(f.level())) {
        int mu_sign = prime_factors_of(d).size() % 2 == 0 ? 1 : -1;
        double term = partial_sum(f, x / static_cast<double>(d), prec);
        if (d == 1) {
            total += term;
        } else {
            total += mu_sign * f.lambda(d).value * term;
        }
    }
    return total;
}

int front_sign(const EigenForm& f) {
    // sgn(eta_f) for eta_f = mu(N) lambda_f(N) sqrt(N). The two i^k factors
    // coming from the functional equation and from the gamma-quotient
    // asymptotics cancel for even k, so no (-1)^{k/2} enters; the regression
    // test pins this against direct partial sums.
    int sign = 1;
    std::size_t omega = prime_factors_of(f.level()).size();
    if (omega % 2 == 1) sign = -sign;  // mu(N) for squarefree N
    if (f.level() > 1) sign *= f.sign_a(f.level());
    return sign;
}

double main_term(const EigenForm& f, double x, std::uint64_t M, Precision prec) {
    if (M > f.bound())
        throw Error(ErrorKind::usage, "truncation length exceeds coefficient table");
    if (x < 1.0) throw Error(ErrorKind::usage, "main_term needs x >= 1");
    if (M == 0) return 0.0;

    const double N = static_cast<double>(f.level());
    const int s_f = front_sign(f);
    double outer = 0.0;
    for (std::uint64_t d : divisors_of(f.level())) {
        int mu_sign = prime_factors_of(d).size() % 2 == 0 ? 1 : -1;
        double lambda_d = d == 1 ? 1.0 : f.lambda(d).value;
        const double dd = static_cast<double>(d);

        Compensated<long double> inner;
        const bool ext = prec == Precision::extended;
        for (std::uint64_t n = 1; n <= M; ++n) {
            double ln = ext ? static_cast<double>(f.lambda_ext(n)) : f.lambda(n).value;
            if (ln == 0.0) continue;
            double root = std::sqrt(static_cast<double>(n) * x / (dd * N));
            double c = std::cos(4.0 * kPi * root - kPi / 4.0);
            inner.add(static_cast<long double>(ln) /
                      std::pow(static_cast<long double>(n), 0.75L) * c);
        }
        outer += mu_sign * lambda_d / std::pow(dd, 0.25) *
                 static_cast<double>(inner.value());
    }
    return s_f / (kPi * std::sqrt(2.0)) * std::pow(N * x, 0.25) * outer;
}

std::uint64_t TruncationPolicy::length_at(double x) const {
    if (fixed > 0) return fixed;
    double m = scale * std::pow(x, exponent);
    if (m < 1.0) return 1;
    return static_cast<std::uint64_t>(std::floor(m));
}

std::vector<VoronoiEvaluation> residual_scan(const EigenForm& f,
                                             const std::vector<double>& xs,
                                             const TruncationPolicy& policy,
                                             Precision prec) {
    for (double x : xs) {
        if (x > static_cast<double>(f.bound()) || policy.length_at(x) > f.bound())
            throw Error(ErrorKind::usage, "scan point or truncation beyond table");
    }
    std::vector<VoronoiEvaluation> rows(xs.size());
    parallel_for(0, xs.size(), 1, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const double x = xs[i];
            VoronoiEvaluation& r = rows[i];
            r.x = x;
            r.M = policy.length_at(x);
            r.direct = partial_sum_coprime(f, x, prec);
            r.main = main_term(f, x, r.M, prec);
            r.residual = r.direct - r.main;
            r.sign = front_sign(f);
        }
    });
    return rows;
}

std::vector<double> half_integer_log_grid(double lo, double hi, std::size_t count) {
    if (lo <= 0 || hi < lo || count == 0)
        throw Error(ErrorKind::usage, "bad grid parameters");
    std::vector<double> xs;
    double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        double x = std::exp(llo + t * (lhi - llo));
        x = std::floor(x) + 0.5;
        if (xs.empty() || x > xs.back()) xs.push_back(x);
    }
    return xs;
}

// ---- kernels ---------------------------------------------------------------

double kernel_w(double xi) {
    double a = kPi * xi;
    if (std::fabs(a) < 1e-8) return 1.0 - a * a / 3.0;
    double s = std::sin(a) / a;
    return s * s;
}

double kernel_K(double u, double alpha, int tau) {
    return (1.0 - std::fabs(u)) * (1.0 + tau * std::cos(4.0 * kPi * alpha * u));
}

RBetaResult r_beta(const KernelParams& params) {
    if (params.beta_num == 0 || params.beta_den == 0)
        throw Error(ErrorKind::usage, "beta must be a positive rational");
    if (params.tau != 1 && params.tau != -1)
        throw Error(ErrorKind::usage, "tau must be +1 or -1");
    const double alpha = params.alpha;
    const double sqrt_beta =
        params.beta_num == params.beta_den
            ? 1.0
            : std::sqrt(static_cast<double>(params.beta_num) /
                        static_cast<double>(params.beta_den));
    const double t = static_cast<double>(params.t);
    const int tau = params.tau;

    auto integrand = [&](double u) {
        return kernel_K(u, alpha, tau) *
               std::cos(4.0 * kPi * (t + alpha * u) * sqrt_beta - kPi / 4.0);
    };
    // Panelled adaptive Simpson: the fastest phase is 2 pi alpha_beta^+ u,
    // so keep panels below one oscillation of that mode.
    double max_freq = 2.0 * alpha * (sqrt_beta + 1.0);
    std::size_t panels = static_cast<std::size_t>(std::ceil(2.0 * max_freq)) + 8;
    if (panels % 2) ++panels;  // split exactly at u = 0 where (1-|u|) kinks
    double numeric = 0.0;
    const double h = 2.0 / static_cast<double>(panels);
    for (std::size_t i = 0; i < panels; ++i) {
        double a = -1.0 + i * h;
        numeric += adaptive_simpson(integrand, a, a + h, 1e-9 / static_cast<double>(panels));
    }

    const double a_b = 2.0 * alpha * sqrt_beta;
    const double a_plus = 2.0 * alpha * (sqrt_beta + 1.0);
    const double a_minus = 2.0 * alpha * (sqrt_beta - 1.0);
    double closed = (kernel_w(a_b) + 0.5 * tau * kernel_w(a_plus) +
                     0.5 * tau * kernel_w(a_minus)) *
                    std::cos(4.0 * kPi * t * sqrt_beta - kPi / 4.0);
    return RBetaResult{numeric, closed};
}

// ---- convolution J_tau ------------------------------------------------------

namespace {

// Prefix values S*_f(y) for integer y in [lo, hi], built once per call by
// walking the table from a direct compensated sum at lo.
class StarTable {
 public:
    StarTable(const EigenForm& f, std::uint64_t lo, std::uint64_t hi) : lo_(lo) {
        values_.reserve(hi - lo + 1);
        Compensated<double> acc;
        for (std::uint64_t n = 1; n <= hi; ++n) {
            if (f.coprime_to_level(n)) acc.add(f.lambda(n).value);
            if (n >= lo) values_.push_back(acc.value());
        }
    }

    double at(double y) const {
        if (y < static_cast<double>(lo_)) return 0.0;
        std::uint64_t i = static_cast<std::uint64_t>(std::floor(y)) - lo_;
        return values_[i];
    }

 private:
    std::uint64_t lo_;
    std::vector<double> values_;
};

}  // namespace

double j_tau(const EigenForm& f, double X, double alpha, int tau) {
    if (tau != 1 && tau != -1) throw Error(ErrorKind::usage, "tau must be +1 or -1");
    const double N = static_cast<double>(f.level());
    const double T = std::sqrt(X / N);
    const std::uint64_t t = static_cast<std::uint64_t>(std::floor(T)) + 1;
    if (alpha <= 0 || alpha >= static_cast<double>(t))
        throw Error(ErrorKind::usage, "alpha must lie in (0, t)");
    const double v_hi = static_cast<double>(t) + alpha;
    const double y_hi = N * v_hi * v_hi;
    if (y_hi > static_cast<double>(f.bound()))
        throw Error(ErrorKind::usage, "convolution window exceeds coefficient table");

    const double v_lo = static_cast<double>(t) - alpha;
    const std::uint64_t lo = static_cast<std::uint64_t>(std::floor(N * v_lo * v_lo));
    const std::uint64_t hi = static_cast<std::uint64_t>(std::floor(y_hi)) + 1;
    StarTable star(f, lo == 0 ? 1 : lo, hi);

    const int s_f = front_sign(f);
    auto F = [&](double v) {
        return kPi * std::sqrt(2.0) / s_f * star.at(N * v * v) / std::sqrt(N * v);
    };
    auto integrand = [&](double u) {
        return F(static_cast<double>(t) + alpha * u) * kernel_K(u, alpha, tau);
    };

    // S* jumps whenever N(t + alpha u)^2 crosses an integer: about
    // 4 N t alpha times over [-1, 1]. Sample 8 points per jump.
    double jumps = 4.0 * N * static_cast<double>(t) * alpha;
    std::uint64_t m = static_cast<std::uint64_t>(std::ceil(8.0 * jumps)) + 16;
    if (m % 2) ++m;  // composite Simpson needs an even subinterval count
    const double h = 2.0 / static_cast<double>(m);
    Compensated<double> acc;
    acc.add(integrand(-1.0));
    acc.add(integrand(1.0));
    for (std::uint64_t i = 1; i < m; ++i) {
        double u = -1.0 + static_cast<double>(i) * h;
        acc.add((i % 2 ? 4.0 : 2.0) * integrand(u));
    }
    return acc.value() * h / 3.0;
}

// ---- extrema ----------------------------------------------------------------

Extrema find_extrema(const EigenForm& f, double X, double window_coeff) {
    if (X < 1.0) throw Error(ErrorKind::usage, "window start must be >= 1");
    if (window_coeff < 0.0) throw Error(ErrorKind::usage, "window coefficient must be >= 0");
    const double end = X + window_coeff * std::sqrt(X);
    if (end > static_cast<double>(f.bound()))
        throw Error(ErrorKind::usage, "window exceeds coefficient table");
    std::uint64_t first = static_cast<std::uint64_t>(std::ceil(X));
    std::uint64_t last = static_cast<std::uint64_t>(std::floor(end));
    if (first > last)
        throw Error(ErrorKind::usage, "window contains no integer point");

    double s = partial_sum_coprime(f, static_cast<double>(first));
    Extrema e{first, s, first, s};
    Compensated<double> acc;
    acc.add(s);
    for (std::uint64_t n = first + 1; n <= last; ++n) {
        if (f.coprime_to_level(n)) acc.add(f.lambda(n).value);
        double v = acc.value();
        if (v > e.s_max) { e.s_max = v; e.x_max = n; }
        if (v < e.s_min) { e.s_min = v; e.x_min = n; }
    }
    return e;
}

// ---- reports ----------------------------------------------------------------

namespace {
std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
}  // namespace

void write_voronoi_csv(std::ostream& out, const std::vector<VoronoiEvaluation>& rows) {
    out << "x,M,direct,main,residual,residual_over_x4\n";
    for (const auto& r : rows) {
        out << fmt12(r.x) << ',' << r.M << ',' << fmt12(r.direct) << ',' << fmt12(r.main)
            << ',' << fmt12(r.residual) << ','
            << fmt12(r.residual / std::pow(r.x, 0.25)) << '\n';
    }
}

std::string voronoi_summary_json(const std::vector<VoronoiEvaluation>& rows) {
    std::vector<double> abs_res;
    abs_res.reserve(rows.size());
    double max_res = 0.0, max_scaled = 0.0;
    for (const auto& r : rows) {
        abs_res.push_back(std::fabs(r.residual));
        max_res = std::max(max_res, std::fabs(r.residual));
        max_scaled = std::max(max_scaled, std::fabs(r.residual) / std::pow(r.x, 0.25));
    }
    double median = 0.0;
    if (!abs_res.empty()) {
        std::sort(abs_res.begin(), abs_res.end());
        std::size_t n = abs_res.size();
        median = n % 2 ? abs_res[n / 2] : 0.5 * (abs_res[n / 2 - 1] + abs_res[n / 2]);
    }
    std::ostringstream os;
    os << "{\"points\":" << rows.size() << ",\"max_abs_residual\":" << fmt12(max_res)
       << ",\"median_abs_residual\":" << fmt12(median)
       << ",\"max_residual_over_x4\":" << fmt12(max_scaled) << "}";
    return os.str();
}

}  // namespace hecke
