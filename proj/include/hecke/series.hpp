#pragma once

#include <cstdint>
#include <vector>

#include "hecke/bigint.hpp"

namespace hecke {

// Exact truncated integer power series: exactly `length` coefficients,
// coeffs[i] = coefficient of q^i. Immutable by convention once built.
class TruncatedSeries {
 public:
    explicit TruncatedSeries(std::size_t length)
        : coeffs_(length) {}
    TruncatedSeries(std::initializer_list<BigInt> init)
        : coeffs_(init) {}

    std::size_t length() const { return coeffs_.size(); }
    const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
    BigInt& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

 private:
    std::vector<BigInt> coeffs_;
};

// Cauchy product truncated to the common length. Lengths must match.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// q-expansion of Delta = q prod_{n>=1} (1-q^n)^24, truncated at L (L >= 2).
// The product is expanded through the Jacobi cube
//   prod (1-q^n)^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2},
// squared once and then convolved with the sparse cube six more times;
// intermediate values live in 128-bit integers behind an overflow guard.
TruncatedSeries eta_power_24(std::size_t length);

// Eisenstein series E4 or E6 with integer normalization:
//   E4 = 1 + 240 sum sigma_3(n) q^n,  E6 = 1 - 504 sum sigma_5(n) q^n.
TruncatedSeries eisenstein(int weight, std::size_t length);

// The normalized cusp eigenform of level 1 and weight k, for the weights
// where the cusp space is one-dimensional: k in {12, 16, 18, 20, 22, 26}.
// Built as Delta * E4^a * E6^b with 4a + 6b = k - 12.
TruncatedSeries level1_eigenform(int weight, std::size_t length);

}  // namespace hecke
