#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fqdigits {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);  // "num/den", normalized

/// Base-b digits of 1/p for an odd prime p with gcd(b, p) = 1.
/// period = ord(b, p) divides p - 1; (sum_j digits[j] b^{T-j}) * p = b^T - 1.
struct IntExpansion {
    std::uint64_t p;
    std::uint64_t b;
    std::uint64_t period;
    std::vector<std::uint32_t> digits;  // digits[j-1] = a_j in [0, b)
};

/// least T with b^T = 1 mod p, via factoring p - 1 and stripping primes.
/// Throws NotPrime, NotCoprime.
std::uint64_t int_order(std::uint64_t b, std::uint64_t p);

/// long division: r_0 = 1, a_j = floor(r_{j-1} b / p), r_j = r_{j-1} b mod p,
/// stop when the remainder returns to 1. b >= 2, p an odd prime coprime to b.
IntExpansion int_expand(std::uint64_t p, std::uint64_t b);

/// Class number h(-p) for p = 3 mod 4, p > 3: the count of reduced primitive
/// binary quadratic forms (a, b, c) with b^2 - 4ac = -p, |b| <= a <= c,
/// gcd(a, b, c) = 1, and b >= 0 at the ties |b| = a or a = c. Throws
/// WrongResidueClass outside that domain, NotPrime for composite p.
std::uint64_t class_number_neg(std::uint64_t p);

enum class IntCase {
    full_period,  // T = p - 1: the average digit is exactly (b-1)/2
    girstmair,    // T = (p-1)/2, p = 3 mod 4, p > 3: class-number bias applies
    other,        // reported without any asserted value
};

std::string to_string(IntCase c);

struct GirstmairReport {
    std::uint64_t p;
    std::uint64_t b;
    std::uint64_t period;
    Rational average;                        // exact (sum of digits)/T
    std::optional<std::uint64_t> h;          // class number, girstmair case only
    std::optional<Rational> predicted;       // (b-1)/2, or (b-1)/2 - (b-1)h/(p-1)
    IntCase kind;
    bool applicable;                         // the class-number identity applies
    bool match;                              // average == predicted (true when nothing is predicted)
};

/// Computes the exact average digit of 1/p in base b and compares it against
/// the applicable identity: (b-1)/2 at full period, the class-number bias
/// (b-1)/2 - (b-1)h_p/(p-1) when ord(b,p) = (p-1)/2 and p = 3 mod 4 (p > 3).
GirstmairReport girstmair_check(std::uint64_t p, std::uint64_t b);

/// One report per (p, b): odd primes p <= p_max in ascending order, bases in
/// the given order, pairs with p | b skipped.
std::vector<GirstmairReport> girstmair_scan(const std::vector<std::uint64_t>& bases,
                                            std::uint64_t p_max);

}  // namespace fqdigits
