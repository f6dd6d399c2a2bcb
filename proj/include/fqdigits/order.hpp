#pragma once

#include <cstdint>

#include "fqdigits/poly.hpp"

namespace fqdigits {

enum class OrderMethod { bruteforce, phi_reduction };

/// Multiplicative order of B in (F_q[x]/(M))*. order divides phi; order >= 2
/// whenever B mod M != 1.
struct OrderResult {
    std::uint64_t order;
    std::uint64_t phi;
    OrderMethod method;
};

/// Least T >= 1 with B^T = 1 mod M, via the totient: factor phi(M), start at
/// T = phi(M) and strip primes while the power stays 1. The minimality
/// certificate (B^T = 1, B^{T/r} != 1 for each prime r | T) is re-verified on
/// every result. Requires deg M >= 1 (ConstantModulus) and gcd(B, M) = 1
/// (NotCoprime).
OrderResult mul_order(const Poly& base, const Poly& modulus);

/// Independent oracle: iterates B, B^2, ... until 1, erroring at cap
/// (CapExceeded).
OrderResult mul_order_bruteforce(const Poly& base, const Poly& modulus,
                                 std::uint64_t cap = 1'000'000);

}  // namespace fqdigits
