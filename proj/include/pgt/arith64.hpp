#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pgt::arith {

std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
/// Trial division by small primes, then Pollard-Brent on the cofactor.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

}  // namespace pgt::arith
