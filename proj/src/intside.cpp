#include "fqdigits/intside.hpp"

#include <numeric>
#include <stdexcept>

#include "fqdigits/errors.hpp"
#include "fqdigits/numeric.hpp"

namespace fqdigits {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::uint64_t int_order(std::uint64_t b, std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (std::gcd(b, p) != 1) {
        throw NotCoprime("base " + std::to_string(b) + " is not a unit mod " + std::to_string(p));
    }
    std::uint64_t t = p - 1;
    for (const auto& [r, e] : factor_u64(p - 1)) {
        (void)e;
        while (t % r == 0 && pow_mod_u64(b, t / r, p) == 1) t /= r;
    }
    return t;
}

IntExpansion int_expand(std::uint64_t p, std::uint64_t b) {
    if (!is_prime_u64(p) || p == 2) throw NotPrime(std::to_string(p) + " is not an odd prime");
    if (b < 2) throw std::invalid_argument("base must be at least 2");
    if (b % p == 0) {
        throw NotCoprime("base " + std::to_string(b) + " is not a unit mod " + std::to_string(p));
    }

    IntExpansion e{p, b, 0, {}};
    std::uint64_t r = 1;
    do {
        const std::uint64_t rb = r * b;
        e.digits.push_back(static_cast<std::uint32_t>(rb / p));
        r = rb % p;
    } while (r != 1);
    e.period = e.digits.size();
    return e;
}

std::uint64_t class_number_neg(std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (p % 4 != 3 || p <= 3) {
        throw WrongResidueClass("the discriminant -p requires a prime p = 3 mod 4, p > 3");
    }
    // reduced primitive forms (a, b, c) of discriminant b^2 - 4ac = -p:
    // |b| <= a <= c, gcd(a, b, c) = 1, b >= 0 at the ties |b| = a or a = c
    std::uint64_t count = 0;
    const auto sp = static_cast<long long>(p);
    for (long long a = 1; 3 * a * a <= sp; ++a) {
        for (long long b = -a; b <= a; ++b) {
            const long long num = b * b + sp;
            if (num % (4 * a) != 0) continue;
            const long long c = num / (4 * a);
            if (c < a) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            ++count;
        }
    }
    return count;
}

GirstmairReport girstmair_check(std::uint64_t p, std::uint64_t b) {
    const IntExpansion e = int_expand(p, b);

    long long digit_total = 0;
    for (std::uint32_t d : e.digits) digit_total += d;
    const Rational average(digit_total, static_cast<long long>(e.period));

    GirstmairReport report{p, b, e.period, average, std::nullopt, std::nullopt,
                           IntCase::other, false, true};
    const Rational half_range(static_cast<long long>(b) - 1, 2);
    if (e.period == p - 1) {
        report.kind = IntCase::full_period;
        report.predicted = half_range;
        report.match = (average == half_range);
    } else if (p % 4 == 3 && p > 3 && e.period == (p - 1) / 2) {
        report.kind = IntCase::girstmair;
        report.applicable = true;
        const std::uint64_t h = class_number_neg(p);
        report.h = h;
        report.predicted =
            half_range - Rational(static_cast<long long>((b - 1) * h),
                                  static_cast<long long>(p - 1));
        report.match = (average == *report.predicted);
    }
    return report;
}

std::string to_string(IntCase c) {
    switch (c) {
        case IntCase::full_period: return "full_period";
        case IntCase::girstmair: return "girstmair";
        case IntCase::other: return "other";
    }
    throw std::logic_error("unreachable");
}

std::vector<GirstmairReport> girstmair_scan(const std::vector<std::uint64_t>& bases,
                                            std::uint64_t p_max) {
    std::vector<GirstmairReport> out;
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (!is_prime_u64(p)) continue;
        for (std::uint64_t b : bases) {
            if (b % p == 0) continue;
            out.push_back(girstmair_check(p, b));
        }
    }
    return out;
}

}  // namespace fqdigits
