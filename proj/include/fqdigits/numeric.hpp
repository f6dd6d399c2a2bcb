#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fqdigits/errors.hpp"

namespace fqdigits {

// Small integer helpers shared by the field, poly, order and intside layers.
// Everything here is deterministic trial-division arithmetic sized for desk
// scale (inputs well below 2^64, primality scans below 10^6).

bool is_prime_u64(std::uint64_t n);

// prime factorization by trial division, (prime, exponent) pairs in ascending
// prime order; n >= 1, n = 1 gives the empty list
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

// a * b, throwing Overflow if the product does not fit uint64
std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b);

// b^e mod m for m >= 2
std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);

}  // namespace fqdigits
