#include "hecke/reference.hpp"

#include "hecke/errors.hpp"

namespace hecke {

TruncatedSeries naive_eta_power_24(std::size_t length) {
    if (length < 2) throw Error(ErrorKind::usage, "need length >= 2");
    const std::size_t P = length - 1;
    std::vector<BigInt> prod(P);
    prod[0] = BigInt(1);
    for (std::size_t n = 1; n < P; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            // multiply by (1 - q^n) in place, highest index first
            for (std::size_t i = P; i-- > n;) prod[i] -= prod[i - n];
        }
    }
    TruncatedSeries out(length);
    for (std::size_t i = 1; i < length; ++i) out[i] = prod[i - 1];
    return out;
}

std::uint64_t naive_sigma(std::uint64_t n, unsigned power) {
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::uint64_t dp = 1;
        for (unsigned i = 0; i < power; ++i) dp *= d;
        total += dp;
    }
    return total;
}

}  // namespace hecke
