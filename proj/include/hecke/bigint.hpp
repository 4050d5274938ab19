#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

// Signed exact integer: sign/magnitude over 64-bit limbs (little-endian,
// no leading zero limbs; zero <=> empty limbs, sign 0). Coefficient work
// here needs a few hundred bits at most, so everything is schoolbook.
// There is no general division; decimal printing uses a small-divisor
// helper internally.
class BigInt {
 public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_i128(__int128 v);
    // Throws Error{usage} on anything that is not an optionally-signed
    // decimal integer.
    static BigInt from_decimal(std::string_view text);
    static BigInt pow(std::uint64_t base, unsigned exp);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    BigInt abs() const;

    bool fits_i64() const;
    long long to_i64() const;  // precondition: fits_i64()
    double to_double() const;
    long double to_long_double() const;
    std::string to_decimal() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) = default;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

 private:
    static int compare_magnitudes(const std::vector<std::uint64_t>& a,
                                  const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_magnitudes(const std::vector<std::uint64_t>& a,
                                                     const std::vector<std::uint64_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint64_t> sub_magnitudes(const std::vector<std::uint64_t>& a,
                                                     const std::vector<std::uint64_t>& b);
    void trim();
    void mul_small(std::uint64_t m);
    void add_small(std::uint64_t v);
    std::uint64_t divmod_small(std::uint64_t d);  // in-place quotient, returns remainder

    int sign_ = 0;
    std::vector<std::uint64_t> limbs_;
};

}  // namespace hecke
