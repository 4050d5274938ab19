#pragma once

#include <cstdint>
#include <vector>

namespace hecke {

// spf[n] = smallest prime factor of n (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t limit);

std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

// d[n] = number of divisors of n, d[0] = 0.
std::vector<std::uint32_t> divisor_counts(std::uint64_t limit);

bool is_prime(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

// Divisors of n in increasing order (n is small: a level, not a bound).
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors_of(std::uint64_t n);

}  // namespace hecke
