#include "hecke/primes.hpp"

#include <algorithm>

namespace hecke {

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t limit) {
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
    return spf;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return primes;
}

std::vector<std::uint32_t> divisor_counts(std::uint64_t limit) {
    // d is multiplicative; build from the smallest-prime-factor table.
    auto spf = smallest_prime_factors(limit);
    std::vector<std::uint32_t> d(limit + 1, 0);
    if (limit >= 1) d[1] = 1;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        std::uint64_t p = spf[n];
        std::uint64_t m = n;
        std::uint32_t e = 0;
        while (m % p == 0) { m /= p; ++e; }
        d[n] = d[m] * (e + 1);
    }
    return d;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::uint64_t> prime_factors_of(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace hecke
