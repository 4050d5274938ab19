#include <cstdint>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/forms.hpp"
#include "hecke/parallel.hpp"
#include "hecke/primes.hpp"

namespace hecke {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

i64 mod_reduce(i64 v, u64 p) {
    i64 r = v % static_cast<i64>(p);
    return r < 0 ? r + static_cast<i64>(p) : r;
}

// Trace of Frobenius at an odd prime p, smooth or singular reduction alike.
// Complete the square: z = 2y + a1 x + a3 turns the affine count into
//   #affine = sum_x (1 + chi(g(x))),  g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6,
// so a_p = -sum_x chi(g(x)). For multiplicative reduction this evaluates to
// +1 (split) or -1 (non-split); additive reduction gives 0.
//
// g is walked with finite differences (third difference of 4x^3 is 24) and
// chi is a table lookup, so the inner loop is add/compare only.
i64 trace_odd_prime(const WeierstrassCoeffs& c, u64 p, std::vector<std::uint8_t>& scratch) {
    const i64 b2 = mod_reduce(c.a1 * c.a1 + 4 * c.a2, p);
    const i64 b4 = mod_reduce(2 * c.a4 + c.a1 * c.a3, p);
    const i64 b6 = mod_reduce(c.a3 * c.a3 + 4 * c.a6, p);

    scratch.assign(p, 0);
    std::uint8_t* qr = scratch.data();
    // Mark quadratic residues: t^2 walked by (t+1)^2 - t^2 = 2t + 1.
    {
        u64 sq = 0, inc = 1;
        for (u64 t = 1; t <= (p - 1) / 2; ++t) {
            sq += inc;
            if (sq >= p) sq -= p;
            inc += 2;
            if (inc >= p) inc -= p;
            qr[sq] = 1;
        }
    }

    // g(0), and the forward differences of g at 0.
    u64 g = static_cast<u64>(b6);
    u64 d1 = static_cast<u64>(mod_reduce(4 + b2 + 2 * b4, p));
    u64 d2 = static_cast<u64>(mod_reduce(24 + 2 * b2, p));
    const u64 d3 = 24 % p;

    i64 chi_sum = 0;
    for (u64 x = 0; x < p; ++x) {
        if (g != 0) chi_sum += qr[g] ? 1 : -1;
        g += d1;
        if (g >= p) g -= p;
        d1 += d2;
        if (d1 >= p) d1 -= p;
        d2 += d3;
        if (d2 >= p) d2 -= p;
    }
    return -chi_sum;
}

// p = 2: enumerate the four affine points of the original model. With good
// reduction a_2 = 2 + 1 - #E = 2 - #affine; with a singular point on the
// curve a_2 = 2 - #E_ns = 1 - #smooth affine.
i64 trace_two(const WeierstrassCoeffs& c) {
    auto m2 = [](i64 v) { return ((v % 2) + 2) % 2; };
    i64 affine = 0, smooth = 0;
    for (i64 x = 0; x < 2; ++x) {
        for (i64 y = 0; y < 2; ++y) {
            i64 lhs = m2(y * y + c.a1 * x * y + c.a3 * y);
            i64 rhs = m2(x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
            if (lhs != rhs) continue;
            ++affine;
            i64 dy = m2(2 * y + c.a1 * x + c.a3);
            i64 dx = m2(c.a1 * y - (3 * x * x + 2 * c.a2 * x + c.a4));
            if (dy == 0 && dx == 0) continue;  // the singular point
            ++smooth;
        }
    }
    return affine == smooth ? 2 - affine : 1 - smooth;
}

}  // namespace

EigenForm from_elliptic_curve(const WeierstrassCoeffs& curve, std::uint64_t conductor,
                              std::uint64_t bound) {
    if (bound < 1) throw Error(ErrorKind::usage, "bound must be >= 1");
    if (conductor == 0 || !is_squarefree(conductor))
        throw Error(ErrorKind::invalid_level,
                    "conductor " + std::to_string(conductor) + " is not squarefree");

    auto primes = primes_upto(bound);
    std::vector<i64> ap(primes.size(), 0);

    parallel_for(0, primes.size(), 8, [&](u64 lo, u64 hi) {
        std::vector<std::uint8_t> scratch;
        for (u64 i = lo; i < hi; ++i) {
            u64 p = primes[i];
            ap[i] = p == 2 ? trace_two(curve) : trace_odd_prime(curve, p, scratch);
        }
    });

    std::vector<std::pair<u64, BigInt>> on_primes;
    on_primes.reserve(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        if (conductor % p == 0 && ap[i] == 0)
            throw Error(ErrorKind::invalid_level,
                        "additive reduction at p=" + std::to_string(p) +
                            "; conductor of the curve is not squarefree");
        on_primes.emplace_back(p, BigInt(static_cast<long long>(ap[i])));
    }

    auto table = hecke_extend(on_primes, 2, conductor, bound);
    return EigenForm::from_parts(2, conductor, std::move(table), FormSource::elliptic);
}

}  // namespace hecke
