#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace graphlab::detail {

/// Deterministic for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, primes ascending; empty for n <= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

}  // namespace graphlab::detail
