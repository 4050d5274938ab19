#include "hecke/series.hpp"

#include <algorithm>
#include <cstdlib>

#include "hecke/errors.hpp"
#include "hecke/parallel.hpp"

namespace hecke {

using i128 = __int128;
using u128 = unsigned __int128;

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.length() != b.length())
        throw Error(ErrorKind::usage, "series length mismatch in mul");
    const std::size_t L = a.length();
    TruncatedSeries out(L);
    // Schoolbook convolution; fine for the lengths this is used at.
    for (std::size_t i = 0; i < L; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < L; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

namespace {

// Jacobi cube prod(1-q^n)^3 = sum (-1)^j (2j+1) q^{j(j+1)/2}, exponents < L.
struct SparseCube {
    std::vector<std::size_t> exps;
    std::vector<std::int64_t> coefs;
    u128 l1_norm = 0;
};

SparseCube jacobi_cube(std::size_t L) {
    SparseCube s;
    for (std::uint64_t j = 0;; ++j) {
        std::uint64_t e = j * (j + 1) / 2;
        if (e >= L) break;
        std::int64_t c = static_cast<std::int64_t>(2 * j + 1);
        if (j & 1u) c = -c;
        s.exps.push_back(static_cast<std::size_t>(e));
        s.coefs.push_back(c);
        s.l1_norm += static_cast<u128>(2 * j + 1);
    }
    return s;
}

constexpr u128 kI128Max = (~static_cast<u128>(0)) >> 1;

// out = dense * cube, truncated to L. Parallel over output blocks; each
// block is owned by one worker, so the result is deterministic.
void mul_sparse(const std::vector<i128>& dense, const SparseCube& cube,
                std::vector<i128>& out) {
    const std::size_t L = dense.size();
    // Guard: |out| <= max|dense| * ||cube||_1 must fit a signed 128-bit value.
    u128 max_abs = 0;
    for (i128 v : dense) {
        u128 a = v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
        if (a > max_abs) max_abs = a;
    }
    if (max_abs != 0 && cube.l1_norm > kI128Max / max_abs)
        throw Error(ErrorKind::internal, "eta expansion would overflow 128 bits");

    out.assign(L, 0);
    parallel_for(0, L, 1u << 16, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::size_t k = 0; k < cube.exps.size(); ++k) {
            const std::size_t e = cube.exps[k];
            if (e >= hi) break;
            const i128 c = cube.coefs[k];
            const std::size_t start = std::max<std::size_t>(lo, e);
            const i128* in = dense.data() + (start - e);
            i128* dst = out.data() + start;
            for (std::size_t n = hi - start; n-- > 0;) {
                *dst++ += c * *in++;
            }
        }
    });
}

}  // namespace

TruncatedSeries eta_power_24(std::size_t L) {
    if (L < 2) throw Error(ErrorKind::usage, "eta_power_24 needs length >= 2");

    const std::size_t P = L - 1;  // expansion length of prod(1-q^n)^24
    SparseCube cube = jacobi_cube(P);

    // prod^6 = cube^2, computed sparse x sparse straight into a dense array.
    std::vector<i128> cur(P, 0);
    for (std::size_t i = 0; i < cube.exps.size(); ++i) {
        for (std::size_t j = 0; j < cube.exps.size(); ++j) {
            std::size_t e = cube.exps[i] + cube.exps[j];
            if (e >= P) break;
            cur[e] += static_cast<i128>(cube.coefs[i]) * cube.coefs[j];
        }
    }

    // Six more sparse convolutions: prod^6 -> prod^9 -> ... -> prod^24.
    std::vector<i128> next;
    for (int step = 0; step < 6; ++step) {
        mul_sparse(cur, cube, next);
        cur.swap(next);
    }

    TruncatedSeries delta(L);
    for (std::size_t n = 1; n < L; ++n) delta[n] = BigInt::from_i128(cur[n - 1]);
    return delta;
}

TruncatedSeries eisenstein(int weight, std::size_t L) {
    if (weight != 4 && weight != 6)
        throw Error(ErrorKind::usage, "eisenstein supports weights 4 and 6 only");
    TruncatedSeries e(L);
    if (L == 0) return e;
    e[0] = BigInt(1);

    // sigma_{w-1} by sieving over divisors; sigma_5(n) needs 128 bits near 10^6.
    std::vector<i128> sigma(L, 0);
    for (std::uint64_t d = 1; d < L; ++d) {
        i128 dw = d;
        dw *= d * d;                       // d^3
        if (weight == 6) dw *= static_cast<i128>(d) * d;  // d^5
        for (std::uint64_t m = d; m < L; m += d) sigma[m] += dw;
    }
    const i128 mult = weight == 4 ? 240 : -504;
    for (std::size_t n = 1; n < L; ++n) e[n] = BigInt::from_i128(mult * sigma[n]);
    return e;
}

TruncatedSeries level1_eigenform(int weight, std::size_t L) {
    int e4 = 0, e6 = 0;
    switch (weight) {
        case 12: e4 = 0; e6 = 0; break;
        case 16: e4 = 1; e6 = 0; break;
        case 18: e4 = 0; e6 = 1; break;
        case 20: e4 = 2; e6 = 0; break;
        case 22: e4 = 1; e6 = 1; break;
        case 26: e4 = 2; e6 = 1; break;
        default:
            throw Error(ErrorKind::unsupported_weight,
                        "level-1 cusp space is not one-dimensional for weight " +
                            std::to_string(weight));
    }
    TruncatedSeries f = eta_power_24(L);
    if (e4 > 0) {
        TruncatedSeries e = eisenstein(4, L);
        for (int i = 0; i < e4; ++i) f = mul(f, e);
    }
    if (e6 > 0) {
        TruncatedSeries e = eisenstein(6, L);
        for (int i = 0; i < e6; ++i) f = mul(f, e);
    }
    return f;
}

}  // namespace hecke
