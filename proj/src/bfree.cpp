#include "hecke/bfree.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>

#include "hecke/errors.hpp"
#include "hecke/parallel.hpp"
#include "hecke/primes.hpp"

namespace hecke {

BSet BSet::from_values(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    BSet b;
    for (std::uint64_t v : values) {
        if (v <= 1) throw Error(ErrorKind::usage, "B-set elements must exceed 1");
        b.elements.push_back({v, BElementKind::squared_prime});
    }
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
            if (std::gcd(b.elements[i].value, b.elements[j].value) != 1)
                throw Error(ErrorKind::usage, "B-set elements must be pairwise coprime");
        }
    }
    return b;
}

bool BSet::contains(std::uint64_t value) const {
    return std::binary_search(
        elements.begin(), elements.end(), BSetElement{value, BElementKind::squared_prime},
        [](const BSetElement& a, const BSetElement& b) { return a.value < b.value; });
}

BSet build_bset(const EigenForm& f, std::uint64_t prime_bound) {
    if (prime_bound > f.bound())
        throw Error(ErrorKind::usage, "prime search bound exceeds coefficient table");
    const std::uint64_t p_prime = least_negative_prime(f);

    BSet b;
    b.prime_bound = prime_bound;
    b.elements.push_back({p_prime, BElementKind::least_negative_prime});
    for (std::uint64_t p : f.level_primes())
        b.elements.push_back({p, BElementKind::level_prime});
    for (std::uint64_t p : primes_upto(prime_bound)) {
        if (p == p_prime || f.level() % p == 0) continue;
        if (f.sign_a(p) == 0) {
            b.elements.push_back({p, BElementKind::zero_eigenvalue_prime});
        } else {
            b.elements.push_back({p * p, BElementKind::squared_prime});
        }
    }
    std::sort(b.elements.begin(), b.elements.end(),
              [](const BSetElement& x, const BSetElement& y) { return x.value < y.value; });
    return b;
}

std::uint64_t BFreeSieve::count_upto(std::uint64_t x) const {
    if (x > limit_) throw Error(ErrorKind::usage, "count_upto beyond sieve limit");
    std::uint64_t count = 0;
    std::uint64_t full_words = (x + 1) >> 6;
    for (std::uint64_t w = 0; w < full_words; ++w) count += std::popcount(words_[w]);
    std::uint64_t rem = (x + 1) & 63;
    if (rem) count += std::popcount(words_[full_words] & ((1ULL << rem) - 1));
    return count;
}

BFreeSieve sieve_bfree(const BSet& bset, std::uint64_t x, std::uint64_t block_bits) {
    if (x < 1) throw Error(ErrorKind::usage, "sieve limit must be >= 1");
    if (block_bits < 64) block_bits = 64;
    const std::uint64_t words = (x >> 6) + 1;
    std::vector<std::uint64_t> bits(words, ~0ULL);
    bits[0] &= ~1ULL;  // bit 0 is not a positive integer

    const std::uint64_t block_words = block_bits >> 6;
    const std::uint64_t blocks = (words + block_words - 1) / block_words;
    parallel_for(0, blocks, 1, [&](std::uint64_t blo, std::uint64_t bhi) {
        for (std::uint64_t blk = blo; blk < bhi; ++blk) {
            const std::uint64_t lo = blk * block_bits;           // first bit of block
            const std::uint64_t hi = std::min((blk + 1) * block_bits, (words << 6));
            for (const auto& el : bset.elements) {
                const std::uint64_t b = el.value;
                if (b > x) break;  // elements are sorted; larger ones cannot divide n <= x
                std::uint64_t m = lo <= b ? b : ((lo + b - 1) / b) * b;
                for (; m < hi; m += b) bits[m >> 6] &= ~(1ULL << (m & 63));
            }
        }
    });

    // clear padding bits above x so popcounts stay honest
    for (std::uint64_t n = x + 1; n < (words << 6); ++n)
        bits[n >> 6] &= ~(1ULL << (n & 63));
    return BFreeSieve(x, std::move(bits));
}

double density_product(const BSet& bset) {
    double product = 1.0;
    for (const auto& el : bset.elements)
        product *= 1.0 - 1.0 / static_cast<double>(el.value);
    if (bset.prime_bound >= 2) {
        // tail over primes beyond the search bound: all of them enter as p^2
        double head = 1.0;
        for (std::uint64_t p : primes_upto(bset.prime_bound))
            head *= 1.0 - 1.0 / (static_cast<double>(p) * static_cast<double>(p));
        product *= (6.0 / (std::numbers::pi * std::numbers::pi)) / head;
    }
    return product;
}

std::uint64_t SignPartition::plus_upto(std::uint64_t x) const {
    return std::upper_bound(plus.begin(), plus.end(), x) - plus.begin();
}

std::uint64_t SignPartition::minus_upto(std::uint64_t x) const {
    return std::upper_bound(minus.begin(), minus.end(), x) - minus.begin();
}

SignPartition partition_signs(const EigenForm& f, const BFreeSieve& sieve) {
    if (f.bound() < sieve.limit())
        throw Error(ErrorKind::usage, "coefficient table shorter than sieve");
    SignPartition part;
    for (std::uint64_t n = 1; n <= sieve.limit(); ++n) {
        if (!sieve.is_bfree(n)) continue;
        int s = f.sign_a(n);
        if (s > 0) {
            part.plus.push_back(n);
        } else if (s < 0) {
            part.minus.push_back(n);
        } else {
            throw Error(ErrorKind::invariant_violation,
                        "lambda_f vanishes at the B-free number " + std::to_string(n));
        }
    }
    return part;
}

LowerBoundCounts lower_bound_count(const EigenForm& f, const SignPartition& partition,
                                   std::uint64_t x) {
    const std::uint64_t p_prime = least_negative_prime(f);
    const std::uint64_t scaled = x / p_prime;
    // N+- = A+- union {a p' : a in A-+}; the two parts are disjoint since
    // no B-free number is divisible by p'.
    LowerBoundCounts c{};
    c.plus = partition.plus_upto(x) + partition.minus_upto(scaled);
    c.minus = partition.minus_upto(x) + partition.plus_upto(scaled);
    c.bfree_scaled = partition.plus_upto(scaled) + partition.minus_upto(scaled);
    return c;
}

SignCounts direct_sign_count(const EigenForm& f, std::uint64_t x) {
    if (x > f.bound()) throw Error(ErrorKind::usage, "count bound exceeds table");
    SignCounts c{};
    for (std::uint64_t n = 1; n <= x; ++n) {
        if (!f.coprime_to_level(n)) continue;
        int s = f.sign_a(n);
        if (s > 0) ++c.plus;
        else if (s < 0) ++c.minus;
    }
    return c;
}

void write_bfree_csv(std::ostream& out, const EigenForm& f, const BFreeSieve& sieve,
                     std::uint64_t upto) {
    upto = std::min(upto, sieve.limit());
    out << "n,bfree,sign\n";
    for (std::uint64_t n = 1; n <= upto; ++n) {
        int s = f.sign_a(n);
        out << n << ',' << (sieve.is_bfree(n) ? 1 : 0) << ','
            << (s > 0 ? '+' : s < 0 ? '-' : '0') << '\n';
    }
}

}  // namespace hecke
