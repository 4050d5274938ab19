#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hecke/forms.hpp"

namespace hecke {

enum class Precision { standard, extended };

// ---- partial sums -------------------------------------------------------

// S_f(x) = sum_{n <= x} lambda_f(n), compensated accumulation.
double partial_sum(const EigenForm& f, double x, Precision prec = Precision::standard);

// S*_f(x): same with the restriction (n, N) = 1.
double partial_sum_coprime(const EigenForm& f, double x, Precision prec = Precision::standard);

// Right-hand side of the multiplicativity identity
//   S*_f(x) = sum_{d|N} (-1)^{omega(d)} lambda_f(d) S_f(x/d),
// which must agree with partial_sum_coprime.
double moebius_identity(const EigenForm& f, double x, Precision prec = Precision::standard);

// ---- truncated main term --------------------------------------------------

// Sign multiplying the main term: sgn(mu(N) a(N)), the sign of the
// functional-equation constant eta_f. Pinned empirically by the regression
// test against direct partial sums.
int front_sign(const EigenForm& f);

// Main term of the truncated formula for S*_f(x):
//   s_f/(pi sqrt 2) (Nx)^{1/4} sum_{d|N} (-1)^{omega(d)} lambda_f(d) d^{-1/4}
//     sum_{n<=M} lambda_f(n) n^{-3/4} cos(4 pi sqrt(nx/(dN)) - pi/4).
double main_term(const EigenForm& f, double x, std::uint64_t M,
                 Precision prec = Precision::standard);

struct VoronoiEvaluation {
    double x;
    std::uint64_t M;
    double direct;    // S*_f(x)
    double main;      // truncated main term
    double residual;  // direct - main
    int sign;         // the front sign used
};

// Truncation policy M(x) = max(1, floor(scale * x^exponent)); scans reject
// policies that would run past the coefficient table.
struct TruncationPolicy {
    double exponent = 1.0;
    double scale = 1.0;
    std::uint64_t fixed = 0;  // when nonzero, M(x) = fixed

    std::uint64_t length_at(double x) const;
};

std::vector<VoronoiEvaluation> residual_scan(const EigenForm& f,
                                             const std::vector<double>& xs,
                                             const TruncationPolicy& policy,
                                             Precision prec = Precision::standard);

// Log-spaced grid snapped to half-integers (m + 1/2), ascending, deduplicated.
std::vector<double> half_integer_log_grid(double lo, double hi, std::size_t count);

// ---- kernel machinery -----------------------------------------------------

// Fejer kernel w(xi) = (sin(pi xi)/(pi xi))^2, w(0) = 1.
double kernel_w(double xi);

// K_tau(u) = (1 - |u|)(1 + tau cos(4 pi alpha u)) on [-1, 1].
double kernel_K(double u, double alpha, int tau);

struct KernelParams {
    double alpha = 1.0;        // >= 1
    int tau = 1;               // +1 or -1
    std::uint64_t t = 1;       // integer center
    std::uint64_t beta_num = 1;
    std::uint64_t beta_den = 1;  // beta = beta_num / beta_den > 0
};

struct RBetaResult {
    double numeric;      // adaptive quadrature of the defining integral
    double closed_form;  // (w(a_b) + tau/2 w(a_b+) + tau/2 w(a_b-)) cos(4 pi t sqrt(beta) - pi/4)
};

RBetaResult r_beta(const KernelParams& params);

// J_tau = int_{-1}^{1} F_f(t + alpha u) K_tau(u) du with T = sqrt(X/N),
// t = floor(T) + 1 and F_f(v) = pi sqrt(2)/s_f * S*_f(N v^2) / sqrt(N v).
// Composite Simpson with at least 4 samples between the integer jumps
// of S*.
double j_tau(const EigenForm& f, double X, double alpha, int tau);

// ---- extrema ---------------------------------------------------------------

struct Extrema {
    std::uint64_t x_max;
    double s_max;
    std::uint64_t x_min;
    double s_min;
};

// Scans the integer points of [X, X + window_coeff * sqrt(X)] and returns
// the argmax/argmin of S*_f.
Extrema find_extrema(const EigenForm& f, double X, double window_coeff);

// ---- reports ---------------------------------------------------------------

void write_voronoi_csv(std::ostream& out, const std::vector<VoronoiEvaluation>& rows);
std::string voronoi_summary_json(const std::vector<VoronoiEvaluation>& rows);

}  // namespace hecke
