#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hecke/forms.hpp"

namespace hecke {

enum class BElementKind {
    zero_eigenvalue_prime,  // p with a(p) = 0, excluded to the first power
    level_prime,            // p | N
    least_negative_prime,   // p'
    squared_prime,          // p^2 for p not dividing p'N with a(p) != 0
};

struct BSetElement {
    std::uint64_t value;
    BElementKind kind;
};

// The exclusion set: pairwise coprime, strictly increasing values.
// prime_bound records how far the prime search ran; hand-built sets carry
// prime_bound = 0 and get no tail correction in density_product.
struct BSet {
    std::vector<BSetElement> elements;
    std::uint64_t prime_bound = 0;

    static BSet from_values(std::vector<std::uint64_t> values);  // test/utility sets
    bool contains(std::uint64_t value) const;
};

BSet build_bset(const EigenForm& f, std::uint64_t prime_bound);

// Membership bitmap for the B-free numbers in [1, limit].
class BFreeSieve {
 public:
    BFreeSieve(std::uint64_t limit, std::vector<std::uint64_t> words)
        : limit_(limit), words_(std::move(words)) {}

    std::uint64_t limit() const { return limit_; }
    bool is_bfree(std::uint64_t n) const {
        return (words_[n >> 6] >> (n & 63)) & 1u;
    }
    // |A intersect [1, x]|
    std::uint64_t count_upto(std::uint64_t x) const;

 private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> words_;
};

// Marks multiples of every element <= x, in independent segments
// (block_bits bits each) so segments can run in parallel.
BFreeSieve sieve_bfree(const BSet& bset, std::uint64_t x,
                       std::uint64_t block_bits = 1u << 20);

// prod (1 - 1/b) over the stored elements, times the closed-form tail
// prod_{p > P} (1 - p^{-2}) = (6/pi^2) / prod_{p <= P} (1 - p^{-2})
// when the set was built with prime search bound P >= 2.
double density_product(const BSet& bset);

// A = A+ union A- split by the exact sign of a(n); a zero eigenvalue
// inside A contradicts the construction and raises invariant_violation.
struct SignPartition {
    std::vector<std::uint64_t> plus;   // ascending
    std::vector<std::uint64_t> minus;  // ascending

    std::uint64_t plus_upto(std::uint64_t x) const;
    std::uint64_t minus_upto(std::uint64_t x) const;
};

SignPartition partition_signs(const EigenForm& f, const BFreeSieve& sieve);

// |N+- intersect [1,x]| for N+- = A+- union {a p' : a in A-+}, together
// with the common lower bound |A intersect [1, x/p']|.
struct LowerBoundCounts {
    std::uint64_t plus;
    std::uint64_t minus;
    std::uint64_t bfree_scaled;
};

LowerBoundCounts lower_bound_count(const EigenForm& f, const SignPartition& partition,
                                   std::uint64_t x);

// Exact counts of n <= x with (n, N) = 1 and a(n) > 0 resp. a(n) < 0.
struct SignCounts {
    std::uint64_t plus;
    std::uint64_t minus;
};

SignCounts direct_sign_count(const EigenForm& f, std::uint64_t x);

// CSV rows `n,bfree,sign` for n <= upto.
void write_bfree_csv(std::ostream& out, const EigenForm& f, const BFreeSieve& sieve,
                     std::uint64_t upto);

}  // namespace hecke
