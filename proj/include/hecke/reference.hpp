#pragma once

#include <cstdint>
#include <vector>

#include "hecke/series.hpp"

namespace hecke {

// Reference expansions, deliberately naive. These are the oracles the test
// and verification suites compare the production paths against; keep them
// independent of series.cpp.

// q prod_{n>=1} (1-q^n)^24 truncated at L, multiplying one factor (1-q^n)
// at a time, 24 passes per n, in exact integers.
TruncatedSeries naive_eta_power_24(std::size_t length);

// sigma_{w-1}(n) by direct divisor enumeration.
std::uint64_t naive_sigma(std::uint64_t n, unsigned power);

}  // namespace hecke
