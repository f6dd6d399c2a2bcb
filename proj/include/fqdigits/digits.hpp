#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqdigits/poly.hpp"

namespace fqdigits {

/// The purely periodic base-B expansion 1/M = 0.(a_1 a_2 ... a_T).
/// digits[j-1] holds a_j, the coefficient of B^{-j}; every digit satisfies
/// deg a_j < deg B, T is the multiplicative order of B mod M, and
/// (sum_j a_j B^{T-j}) * M = B^T - 1 exactly.
struct Expansion {
    Poly base;
    Poly modulus;
    std::uint64_t period;
    std::vector<Poly> digits;
};

/// Long-division engine: r_0 = 1, (a_j, r_j) = divmod(r_{j-1} * B, M), stop at
/// the first return of the remainder to 1. Requires deg B >= 1 (ConstantBase),
/// deg M >= 1 (ConstantModulus), gcd(M, B) = 1 (NotCoprime).
Expansion expand_longdiv(const Poly& M, const Poly& B);

/// Cofactor engine: T = mul_order(B, M), K = (B^T - 1)/M by exact division,
/// digits of 1/M are the base-B digits of K in reverse. Equal to
/// expand_longdiv digit-for-digit. InexactDivision signals an internal bug
/// (the division is exact whenever the preconditions hold).
Expansion expand_via_cofactor(const Poly& M, const Poly& B);

/// Base-B digits of K, least significant first, by greedy repeated divmod;
/// each digit has deg < deg B and sum_j k_j B^j = K. Zero gives the empty
/// list. Requires deg B >= 1 (ConstantBase).
std::vector<Poly> base_digits(const Poly& K, const Poly& B);

enum class SumCase {
    coprime,     // gcd(M, B(B-1)) = 1: the digit sum vanishes
    period_one,  // B = 1 mod M: T = 1 and the digit sum is K = (B-1)/M
    other,       // gcd(M, B-1) nontrivial but B != 1 mod M: reported, nothing asserted
};

std::string to_string(SumCase c);

struct DigitSumReport {
    Poly modulus;
    Poly base;
    Poly sum;  // a_1 + ... + a_T in F_q[x]
    std::uint64_t period;
    SumCase kind;
    std::optional<Poly> cofactor;  // K, attached in the period-one case
};

/// Sums the digits and classifies by gcd(M, B(B-1)). Pure computation: the
/// vanishing claims are checked by sweep()/callers, not here.
DigitSumReport digit_sum(const Expansion& e);

/// S/T in F_q[x], defined when T is invertible in F_q (always for irreducible
/// M). Throws PeriodDivisibleByCharacteristic otherwise.
Poly average_digit(const Expansion& e);

struct SweepRecord {
    std::string modulus;
    std::string base;
    std::uint64_t period;
    std::vector<std::string> digits;
    std::string digit_sum;
    SumCase kind;
};

struct SweepReport {
    std::string field;
    std::string base;
    unsigned max_degree;
    struct PerDegree {
        unsigned degree;
        std::uint64_t coprime_count;
        std::uint64_t period_one_count;
    };
    std::vector<PerDegree> per_degree;
    std::uint64_t failures;  // 0 on return; any violation throws instead
    double elapsed_seconds;
    std::vector<SweepRecord> records;  // canonical modulus order within each degree
};

/// Verification sweep over all monic M with 1 <= deg M <= max_degree.
/// For every M coprime to B(B-1): runs both expansion engines, requires them
/// to agree digit-for-digit and the digit sum to vanish. For every M dividing
/// B-1: requires T = 1 and digit sum K with K*M = B-1 exactly. Only monic
/// moduli are visited; scalar multiples carry scalar multiples of the same
/// digits, so the zero-sum conclusion is unchanged. Any violation throws
/// VerificationFailure naming the offending modulus.
SweepReport sweep(const FieldCtx& ctx, const Poly& base, unsigned max_degree);

}  // namespace fqdigits
