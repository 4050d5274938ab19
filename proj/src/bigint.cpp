#include "hecke/bigint.hpp"

#include <cctype>
#include <cmath>

#include "hecke/errors.hpp"

namespace hecke {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    u64 mag = v > 0 ? static_cast<u64>(v) : ~static_cast<u64>(v) + 1;
    limbs_.push_back(mag);
}

BigInt BigInt::from_i128(__int128 v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = v > 0 ? 1 : -1;
    u128 mag = v > 0 ? static_cast<u128>(v) : ~static_cast<u128>(v) + 1;
    r.limbs_.push_back(static_cast<u64>(mag));
    if (u64 hi = static_cast<u64>(mag >> 64)) r.limbs_.push_back(hi);
    return r;
}

BigInt BigInt::from_decimal(std::string_view text) {
    std::size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    if (i == text.size()) throw Error(ErrorKind::usage, "empty integer literal");
    BigInt r;
    while (i < text.size()) {
        std::size_t chunk_len = 0;
        u64 chunk = 0;
        u64 scale = 1;
        while (i < text.size() && chunk_len < 18) {
            char c = text[i];
            if (c < '0' || c > '9')
                throw Error(ErrorKind::usage,
                            "bad integer literal: " + std::string(text));
            chunk = chunk * 10 + static_cast<u64>(c - '0');
            scale *= 10;
            ++chunk_len;
            ++i;
        }
        r.mul_small(scale);
        r.add_small(chunk);
    }
    if (!r.limbs_.empty()) r.sign_ = sign;
    return r;
}

BigInt BigInt::pow(u64 base, unsigned exp) {
    BigInt r(1);
    BigInt b = from_i128(static_cast<__int128>(base));
    while (exp > 0) {
        if (exp & 1u) r = r * b;
        b = b * b;
        exp >>= 1u;
    }
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

bool BigInt::fits_i64() const {
    if (limbs_.size() > 1) return false;
    if (limbs_.empty()) return true;
    u64 mag = limbs_[0];
    return sign_ > 0 ? mag <= 0x7fffffffffffffffULL : mag <= 0x8000000000000000ULL;
}

long long BigInt::to_i64() const {
    if (!fits_i64()) throw Error(ErrorKind::usage, "value does not fit in 64 bits");
    if (limbs_.empty()) return 0;
    if (sign_ > 0) return static_cast<long long>(limbs_[0]);
    return static_cast<long long>(~limbs_[0] + 1);
}

long double BigInt::to_long_double() const {
    if (limbs_.empty()) return 0.0L;
    std::size_t n = limbs_.size();
    long double top = static_cast<long double>(limbs_[n - 1]);
    int shift = 0;
    if (n >= 2) {
        top = top * 18446744073709551616.0L + static_cast<long double>(limbs_[n - 2]);
        shift = 64 * static_cast<int>(n - 2);
    }
    long double r = std::ldexp(top, shift);
    return sign_ < 0 ? -r : r;
}

double BigInt::to_double() const {
    return static_cast<double>(to_long_double());
}

std::string BigInt::to_decimal() const {
    if (limbs_.empty()) return "0";
    BigInt tmp = *this;
    std::string out;
    constexpr u64 kChunk = 10000000000000000000ULL;  // 10^19
    while (!tmp.limbs_.empty()) {
        u64 rem = tmp.divmod_small(kChunk);
        if (tmp.limbs_.empty()) {
            out.insert(0, std::to_string(rem));
        } else {
            std::string part = std::to_string(rem);
            out.insert(0, std::string(19 - part.size(), '0') + part);
        }
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

int BigInt::compare_magnitudes(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<u64> BigInt::add_magnitudes(const std::vector<u64>& a, const std::vector<u64>& b) {
    const std::vector<u64>& lo = a.size() >= b.size() ? b : a;
    const std::vector<u64>& hi = a.size() >= b.size() ? a : b;
    std::vector<u64> r(hi.size());
    u64 carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        u128 s = static_cast<u128>(hi[i]) + carry;
        if (i < lo.size()) s += lo[i];
        r[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    if (carry) r.push_back(carry);
    return r;
}

std::vector<u64> BigInt::sub_magnitudes(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size());
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u128 sub = static_cast<u128>(borrow) + (i < b.size() ? b[i] : 0);
        if (static_cast<u128>(a[i]) >= sub) {
            r[i] = static_cast<u64>(static_cast<u128>(a[i]) - sub);
            borrow = 0;
        } else {
            r[i] = static_cast<u64>((static_cast<u128>(1) << 64) + a[i] - sub);
            borrow = 1;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) { *this = rhs; return *this; }
    if (sign_ == rhs.sign_) {
        limbs_ = add_magnitudes(limbs_, rhs.limbs_);
        return *this;
    }
    int c = compare_magnitudes(limbs_, rhs.limbs_);
    if (c == 0) { limbs_.clear(); sign_ = 0; return *this; }
    if (c > 0) {
        limbs_ = sub_magnitudes(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_magnitudes(rhs.limbs_, limbs_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    return *this += -rhs;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        u128 ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = ai * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r.limbs_[i + b.limbs_.size()] = carry;
    }
    r.trim();
    return r;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::compare_magnitudes(a.limbs_, b.limbs_);
    if (a.sign_ >= 0) return c <=> 0;
    return 0 <=> c;
}

void BigInt::mul_small(u64 m) {
    if (m == 0 || limbs_.empty()) { limbs_.clear(); sign_ = 0; return; }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 cur = static_cast<u128>(limb) * m + carry;
        limb = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    if (carry) limbs_.push_back(carry);
}

void BigInt::add_small(u64 v) {
    if (v == 0) return;
    if (limbs_.empty()) { limbs_.push_back(v); sign_ = 1; return; }
    // Only used while building magnitudes from digits (sign applied last).
    u64 carry = v;
    for (auto& limb : limbs_) {
        u128 cur = static_cast<u128>(limb) + carry;
        limb = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
        if (!carry) break;
    }
    if (carry) limbs_.push_back(carry);
}

u64 BigInt::divmod_small(u64 d) {
    u64 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
        limbs_[i] = static_cast<u64>(cur / d);
        rem = static_cast<u64>(cur % d);
    }
    trim();
    return rem;
}

}  // namespace hecke
