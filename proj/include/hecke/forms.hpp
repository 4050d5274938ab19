#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hecke/bigint.hpp"

namespace hecke {

enum class FormSource { level1, elliptic, file };

// Normalized eigenvalue lambda_f(n) = a(n) / n^{(k-1)/2}. The sign is
// taken from the exact integer a(n), never from the floating-point value.
struct Eigenvalue {
    double value;
    int sign;
};

// A primitive form given by its exact coefficient table a(n), 1 <= n <= bound,
// with even weight k and squarefree level N. Immutable after construction.
class EigenForm {
 public:
    // Takes ownership of a 1-indexed table (index 0 unused). Checks the
    // cheap invariants: N squarefree, a(1) = 1, table long enough.
    static EigenForm from_parts(int weight, std::uint64_t level,
                                std::vector<BigInt> table, FormSource source);

    int weight() const { return weight_; }
    std::uint64_t level() const { return level_; }
    std::uint64_t bound() const { return bound_; }
    FormSource source() const { return source_; }
    const std::vector<std::uint64_t>& level_primes() const { return level_primes_; }

    const BigInt& a(std::uint64_t n) const;
    int sign_a(std::uint64_t n) const { return sign_[check_index(n)]; }
    Eigenvalue lambda(std::uint64_t n) const;
    long double lambda_ext(std::uint64_t n) const;
    bool coprime_to_level(std::uint64_t n) const;

    std::string describe() const;

 private:
    EigenForm() = default;
    std::uint64_t check_index(std::uint64_t n) const;

    int weight_ = 0;
    std::uint64_t level_ = 1;
    std::uint64_t bound_ = 0;
    FormSource source_ = FormSource::level1;
    std::vector<BigInt> a_;          // 1-indexed, a_[0] unused
    std::vector<double> lambda_;     // cached normalized eigenvalues
    std::vector<std::int8_t> sign_;  // exact signs of a(n)
    std::vector<std::uint64_t> level_primes_;
};

struct WeierstrassCoeffs {
    long long a1, a2, a3, a4, a6;
};

// ---- constructors -----------------------------------------------------

EigenForm from_level1(int weight, std::uint64_t bound);

// Weight-2 form of an elliptic curve with squarefree conductor N:
// a(p) = p + 1 - #E(F_p) for p not dividing N (brute-force point count),
// a(p) = +-1 from the reduced singular curve for p | N, composites by
// hecke_extend. Additive reduction at some p | N is an invalid-level error.
EigenForm from_elliptic_curve(const WeierstrassCoeffs& curve, std::uint64_t conductor,
                              std::uint64_t bound);

// Canonical coefficient file: header `k=<int> N=<int>`, then `<n> <a(n)>`
// with n = 1, 2, 3, ... contiguous; `#` starts a comment. Loading validates
// a(1) = 1, coprime multiplicativity, and the level-prime relations.
EigenForm from_file(const std::string& path);
EigenForm read_coefficients(std::istream& in, const std::string& origin);
void save_coefficients(const EigenForm& f, const std::string& path);
void write_coefficients(const EigenForm& f, std::ostream& out);

// ---- operations -------------------------------------------------------

// Completes a table from prime values: multiplicativity across coprime
// parts, a(p^{v+1}) = a(p)a(p^v) - p^{k-1}a(p^{v-1}) at good primes, and
// a(p^v) = a(p)^v at level primes. Every prime <= bound must be present.
std::vector<BigInt> hecke_extend(const std::vector<std::pair<std::uint64_t, BigInt>>& a_on_primes,
                                 int weight, std::uint64_t level, std::uint64_t bound);

// First n <= bound with (n, N) = 1 and a(n)^2 > d(n)^2 n^{k-1}, in exact
// integers; nullopt when Deligne's inequality holds throughout.
std::optional<std::uint64_t> verify_deligne(const EigenForm& f, std::uint64_t bound);

// Least prime p' with p' not dividing N and a(p') < 0. Throws
// Error{search_exhausted} if the table contains no such prime.
std::uint64_t least_negative_prime(const EigenForm& f);

// Sign epsilon_f(p) in {+1, -1} for p | N, validating a(p)^2 = p^{k-2}.
int epsilon(const EigenForm& f, std::uint64_t p);

}  // namespace hecke
