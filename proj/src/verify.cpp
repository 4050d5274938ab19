#include "hecke/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "hecke/bfree.hpp"
#include "hecke/errors.hpp"
#include "hecke/forms.hpp"
#include "hecke/intervals.hpp"
#include "hecke/primes.hpp"
#include "hecke/reference.hpp"
#include "hecke/voronoi.hpp"

namespace hecke {

namespace {

constexpr std::uint64_t kDeltaBound = 1'010'000;
constexpr std::uint64_t kCurveBound = 1'100'000;
const WeierstrassCoeffs kCurve11{0, -1, 1, -10, -20};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Lazily built forms shared by the criteria.
struct Forms {
    std::ostream& log;
    std::unique_ptr<EigenForm> delta_form;
    std::unique_ptr<EigenForm> curve_form;

    explicit Forms(std::ostream& out) : log(out) {}

    const EigenForm& delta() {
        if (!delta_form) {
            log << "  [setup] level-1 weight-12 table to " << kDeltaBound << "...\n" << std::flush;
            delta_form = std::make_unique<EigenForm>(from_level1(12, kDeltaBound));
        }
        return *delta_form;
    }
    const EigenForm& curve() {
        if (!curve_form) {
            log << "  [setup] level-11 weight-2 table to " << kCurveBound
                << " (point counts over all p)...\n" << std::flush;
            curve_form = std::make_unique<EigenForm>(
                from_elliptic_curve(kCurve11, 11, kCurveBound));
        }
        return *curve_form;
    }
};

using Check = std::pair<bool, std::string>;

// 1. exact coefficients: multiplicativity, prime-power recursion, and spot
//    values against the naive eta-product oracle, all exact.
Check criterion_exact_coefficients(Forms& forms) {
    const EigenForm& f = forms.delta();
    const std::uint64_t limit = 100'000;

    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint64_t> m_dist(1, 1000);
    std::uint64_t pairs = 0, bad = 0;
    while (pairs < 10'000) {
        std::uint64_t m = m_dist(rng);
        std::uniform_int_distribution<std::uint64_t> n_dist(1, limit / m);
        std::uint64_t n = n_dist(rng);
        if (std::gcd(m, n) != 1) continue;
        ++pairs;
        if (f.a(m * n) != f.a(m) * f.a(n)) ++bad;
    }

    std::uint64_t bad_powers = 0;
    for (std::uint64_t p : primes_upto(316)) {
        BigInt pk = BigInt::pow(p, 11);
        for (std::uint64_t pv = p * p; pv <= limit; pv *= p) {
            BigInt expect = f.a(p) * f.a(pv / p) - pk * f.a(pv / (p * p));
            if (f.a(pv) != expect) ++bad_powers;
        }
    }

    TruncatedSeries oracle = naive_eta_power_24(5);
    bool spots = f.a(2) == BigInt(-24) && f.a(3) == BigInt(252) && f.a(4) == BigInt(-1472) &&
                 oracle[2] == BigInt(-24) && oracle[3] == BigInt(252) &&
                 oracle[4] == BigInt(-1472);

    bool ok = bad == 0 && bad_powers == 0 && spots;
    std::ostringstream d;
    d << pairs << " coprime pairs, " << bad << " multiplicativity failures, " << bad_powers
      << " recursion failures, spot values " << (spots ? "match" : "MISMATCH");
    return {ok, d.str()};
}

// 2. Deligne bound in exact integers up to 10^6 on both forms.
Check criterion_deligne(Forms& forms) {
    auto c1 = verify_deligne(forms.delta(), 1'000'000);
    auto c2 = verify_deligne(forms.curve(), 1'000'000);
    bool ok = !c1 && !c2;
    std::ostringstream d;
    d << "level1:12 " << (c1 ? "counterexample n=" + std::to_string(*c1) : "clean")
      << "; level-11 curve " << (c2 ? "counterexample n=" + std::to_string(*c2) : "clean");
    return {ok, d.str()};
}

// 3. level-prime relation at p = 11.
Check criterion_level_prime(Forms& forms) {
    const EigenForm& f = forms.curve();
    const BigInt& a11 = f.a(11);
    bool unit = a11 == BigInt(1) || a11 == BigInt(-1);
    bool powers = true;
    BigInt expect(1);
    std::uint64_t pv = 1;
    for (int v = 1; v <= 5; ++v) {
        pv *= 11;
        expect = expect * a11;
        if (f.a(pv) != expect) powers = false;
    }
    std::ostringstream d;
    d << "a(11)=" << a11.to_decimal() << (unit ? " in {+-1}" : " NOT in {+-1}")
      << ", a(11^v)=a(11)^v for v<=5 " << (powers ? "exact" : "FAILS");
    return {unit && powers, d.str()};
}

// 4. B-free density matches prod(1 - 1/b) = 4/pi^2 within 1% at x = 10^6.
Check criterion_bfree_density(Forms& forms) {
    const EigenForm& f = forms.delta();
    BSet bset = build_bset(f, 1000);
    BFreeSieve sieve = sieve_bfree(bset, 1'000'000);
    double ratio = static_cast<double>(sieve.count_upto(1'000'000)) / 1e6;
    double target = 4.0 / (std::numbers::pi * std::numbers::pi);
    double product = density_product(bset);
    double rel = std::fabs(ratio - target) / target;
    bool ok = rel <= 0.01;
    std::ostringstream d;
    d << "|A|/x=" << fmt(ratio) << ", 4/pi^2=" << fmt(target) << ", product=" << fmt(product)
      << ", rel.diff=" << fmt(rel);
    return {ok, d.str()};
}

// 5. Theorem 1 at x = 10^6: the p'-multiplication inequality exactly, and
//    both direct sign densities at least 0.202.
Check criterion_theorem1(Forms& forms) {
    const EigenForm& f = forms.delta();
    const std::uint64_t x = 1'000'000;
    BSet bset = build_bset(f, 1000);
    BFreeSieve sieve = sieve_bfree(bset, x);
    SignPartition part = partition_signs(f, sieve);
    LowerBoundCounts lb = lower_bound_count(f, part, x);
    SignCounts direct = direct_sign_count(f, x);
    bool ineq = lb.plus >= lb.bfree_scaled && lb.minus >= lb.bfree_scaled;
    double dp = static_cast<double>(direct.plus) / x;
    double dm = static_cast<double>(direct.minus) / x;
    bool dens = dp >= 0.202 && dm >= 0.202;
    std::ostringstream d;
    d << "lower bounds (" << lb.plus << ", " << lb.minus << ") vs |A cap [1,x/2]|="
      << lb.bfree_scaled << (ineq ? " ok" : " VIOLATED") << "; densities " << fmt(dp) << "/"
      << fmt(dm) << (dens ? " >= 0.202" : " BELOW 0.202");
    return {ineq && dens, d.str()};
}

// 6. Moebius identity vs the coprime partial sum at every integer x <= 10^4.
Check criterion_moebius(Forms& forms) {
    const EigenForm& f = forms.curve();
    double worst = 0.0;
    for (std::uint64_t x = 1; x <= 10'000; ++x) {
        double lhs = moebius_identity(f, static_cast<double>(x));
        double rhs = partial_sum_coprime(f, static_cast<double>(x));
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    bool ok = worst <= 1e-6;
    return {ok, "max |identity - direct| = " + fmt(worst)};
}

// 7. Truncated formula residuals on the half-integer grid, plus the
//    decay of the median residual as M grows from x/100 to x.
Check criterion_voronoi(Forms& forms) {
    const EigenForm& f = forms.delta();
    auto xs = half_integer_log_grid(1e3, 1e5, 100);
    auto full = residual_scan(f, xs, TruncationPolicy{1.0, 1.0, 0});
    auto hundredth = residual_scan(f, xs, TruncationPolicy{1.0, 0.01, 0});

    double max_scaled = 0.0;
    std::vector<double> res_full, res_hundredth;
    for (const auto& r : full) {
        max_scaled = std::max(max_scaled, std::fabs(r.residual) / std::pow(r.x, 0.25));
        res_full.push_back(std::fabs(r.residual));
    }
    for (const auto& r : hundredth) res_hundredth.push_back(std::fabs(r.residual));
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        std::size_t n = v.size();
        return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    };
    double med_full = median(res_full), med_hundredth = median(res_hundredth);
    bool ok = max_scaled <= 0.5 && med_full < med_hundredth;
    std::ostringstream d;
    d << "max |res|/x^(1/4) = " << fmt(max_scaled) << " (<= 0.5), median M=x " << fmt(med_full)
      << " vs M=x/100 " << fmt(med_hundredth);
    return {ok, d.str()};
}

// 8. r_beta: quadrature equals the closed w-combination on the grid, and
//    the beta = 1 value is tau/(2 sqrt 2) up to O(alpha^{-2}).
Check criterion_kernel(Forms&) {
    double worst = 0.0;
    for (std::uint64_t den : {1ull, 2ull, 11ull}) {
        for (std::uint64_t num : {1ull, 2ull, 3ull, 4ull, 11ull, 22ull}) {
            for (double alpha : {5.0, 10.0, 20.0, 50.0}) {
                for (int tau : {1, -1}) {
                    for (std::uint64_t t : {1ull, 100ull}) {
                        auto r = r_beta(KernelParams{alpha, tau, t, num, den});
                        worst = std::max(worst, std::fabs(r.numeric - r.closed_form));
                    }
                }
            }
        }
    }
    double worst_main = 0.0;
    const double half_inv_sqrt2 = 0.5 / std::sqrt(2.0);
    for (double alpha : {20.0, 50.0}) {
        for (int tau : {1, -1}) {
            for (std::uint64_t t : {1ull, 100ull}) {
                auto r = r_beta(KernelParams{alpha, tau, t, 1, 1});
                worst_main = std::max(worst_main,
                                      std::fabs(r.numeric - tau * half_inv_sqrt2));
            }
        }
    }
    bool ok = worst <= 1e-8 && worst_main <= 0.01;
    std::ostringstream d;
    d << "max |numeric - closed| = " << fmt(worst) << " (<= 1e-8), beta=1 offset "
      << fmt(worst_main) << " (<= 0.01)";
    return {ok, d.str()};
}

// 9. Extrema of S* in Heath-Brown/Tsang windows and the displayed J_tau
//    inequalities at the stated X = 10^4. The J(-1) clause is expected to
//    fail there: the truncated formula omits the residue at s = 0 (about
//    0.733 for the weight-12 form), which enters J as a tau-independent
//    offset of roughly pi sqrt(2) L(0)/sqrt(T), about +0.33 at T = 100.
//    The inequalities hold once that term decays (X >= 2*10^4); the
//    X = 10^5 values are printed for reference.
Check criterion_lemma_ht(Forms& forms) {
    const EigenForm& f = forms.delta();
    const double width = 3.0 * c_N(1, 3.0);
    bool extrema_ok = true;
    std::ostringstream d;
    for (double X : {1e4, 1e5}) {
        Extrema e = find_extrema(f, X, width);
        double thr = 0.05 * std::pow(X, 0.25);
        bool ok = e.s_max >= thr && e.s_min <= -thr;
        extrema_ok = extrema_ok && ok;
        d << "X=" << fmt(X) << ": S* in [" << fmt(e.s_min) << ", " << fmt(e.s_max)
          << "] vs +-" << fmt(thr) << (ok ? " ok; " : " FAIL; ");
    }
    const double bar = 1.0 / (std::numbers::pi * std::numbers::pi * std::sqrt(2.0));
    double j_plus = j_tau(f, 1e4, 20.0, 1);
    double j_minus = j_tau(f, 1e4, 20.0, -1);
    bool j_ok = j_plus > bar && j_minus < -bar;
    d << "J(+1)=" << fmt(j_plus) << ", J(-1)=" << fmt(j_minus) << " vs +-1/(pi^2 sqrt2)="
      << fmt(bar) << (j_ok ? "" : " FAIL (s=0 residue offset; see notes)");
    double jp5 = j_tau(f, 1e5, 20.0, 1);
    double jm5 = j_tau(f, 1e5, 20.0, -1);
    d << "; at X=1e5: J(+1)=" << fmt(jp5) << ", J(-1)=" << fmt(jm5);
    return {extrema_ok && j_ok, d.str()};
}

// 10. Theorem 2 windows pass at every grid point on both forms, and the
//     alternating triple exists with opposite-signed consecutive differences.
Check criterion_theorem2(Forms& forms) {
    bool ok = true;
    std::ostringstream d;
    for (const EigenForm* f : {&forms.delta(), &forms.curve()}) {
        const double cn = c_N(f->level(), 3.0);
        for (double x : {1e4, 1e5, 1e6}) {
            IntervalReport r = verify_short_interval(*f, x, 0.1, 3.0);
            bool window_ok = r.pass;
            auto triple = alternating_triple(*f, x, cn);
            bool triple_ok = false;
            if (triple) {
                double d1 = (*triple)[1].s_star - (*triple)[0].s_star;
                double d2 = (*triple)[2].s_star - (*triple)[1].s_star;
                triple_ok = (d1 > 0) != (d2 > 0) && d1 != 0 && d2 != 0;
            }
            ok = ok && window_ok && triple_ok;
            d << "N=" << f->level() << " x=" << fmt(x) << ": min(" << r.plus << "," << r.minus
              << ")" << (window_ok ? ">=" : "<") << fmt(r.threshold) << ", triple "
              << (triple_ok ? "ok" : "MISSING") << "; ";
        }
    }
    return {ok, d.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& log, const std::vector<int>& only) {
    struct Entry {
        int index;
        const char* name;
        Check (*run)(Forms&);
    };
    const Entry entries[] = {
        {1, "exact-coefficients", criterion_exact_coefficients},
        {2, "deligne-bound", criterion_deligne},
        {3, "level-prime-relation", criterion_level_prime},
        {4, "bfree-density", criterion_bfree_density},
        {5, "theorem1-desk-scale", criterion_theorem1},
        {6, "moebius-identity", criterion_moebius},
        {7, "voronoi-residual", criterion_voronoi},
        {8, "kernel-identities", criterion_kernel},
        {9, "lemma-ht-desk-scale", criterion_lemma_ht},
        {10, "theorem2-desk-scale", criterion_theorem2},
    };

    Forms forms(log);
    std::vector<CriterionResult> results;
    for (const Entry& e : entries) {
        if (!only.empty() && std::find(only.begin(), only.end(), e.index) == only.end())
            continue;
        Check c = e.run(forms);
        results.push_back({e.index, e.name, c.first, c.second});
        log << (c.first ? "[PASS] " : "[FAIL] ") << e.index << ". " << e.name << ": "
            << c.second << "\n" << std::flush;
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

}  // namespace hecke
