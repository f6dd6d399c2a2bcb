#include "fqdigits/digits.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "fqdigits/order.hpp"

namespace fqdigits {

namespace {

// hard guard against runaway expansions; legitimate periods at desk scale
// stay far below this
constexpr std::uint64_t kPeriodGuard = 10'000'000;

void check_expansion_inputs(const Poly& M, const Poly& B) {
    if (B.degree() < Degree(1)) throw ConstantBase("the base must have degree >= 1");
    if (M.degree() < Degree(1)) throw ConstantModulus("the modulus must have degree >= 1");
    if (gcd(M, B).degree() != Degree(0)) {
        throw NotCoprime("1/" + to_string(M) + " has no purely periodic base-" + to_string(B) +
                         " expansion: gcd(M, B) is nontrivial");
    }
}

}  // namespace

Expansion expand_longdiv(const Poly& M, const Poly& B) {
    check_expansion_inputs(M, B);
    const Poly start = Poly::one(M.ctx());

    std::vector<Poly> digits;
    Poly r = start;
    do {
        auto qr = divmod(r * B, M);
        digits.push_back(std::move(qr.quotient));
        r = std::move(qr.remainder);
        if (digits.size() > kPeriodGuard) {
            throw CapExceeded("expansion period exceeds the supported size");
        }
    } while (r != start);

    const std::uint64_t period = digits.size();
    return Expansion{B, M, period, std::move(digits)};
}

Expansion expand_via_cofactor(const Poly& M, const Poly& B) {
    check_expansion_inputs(M, B);
    const std::uint64_t period = mul_order(B, M).order;

    Poly numerator = pow(B, period) - Poly::one(M.ctx());
    auto qr = divmod(numerator, M);
    if (!qr.remainder.is_zero()) {
        throw InexactDivision("B^T - 1 is not divisible by M; this indicates an internal bug");
    }
    const Poly cofactor = std::move(qr.quotient);

    std::vector<Poly> digits = base_digits(cofactor, B);
    digits.resize(period, Poly(M.ctx()));  // pad the high end with zero digits
    std::reverse(digits.begin(), digits.end());
    return Expansion{B, M, period, std::move(digits)};
}

std::vector<Poly> base_digits(const Poly& K, const Poly& B) {
    if (B.degree() < Degree(1)) throw ConstantBase("the base must have degree >= 1");
    std::vector<Poly> digits;
    Poly v = K;
    while (!v.is_zero()) {
        auto qr = divmod(v, B);
        digits.push_back(std::move(qr.remainder));
        v = std::move(qr.quotient);
    }
    return digits;
}

DigitSumReport digit_sum(const Expansion& e) {
    Poly sum(e.modulus.ctx());
    for (const Poly& d : e.digits) sum = sum + d;

    const Poly base_minus_one = e.base - Poly::one(e.base.ctx());
    auto qr = divmod(base_minus_one, e.modulus);

    DigitSumReport report{e.modulus, e.base, std::move(sum), e.period, SumCase::other,
                          std::nullopt};
    if (qr.remainder.is_zero()) {
        report.kind = SumCase::period_one;
        report.cofactor = std::move(qr.quotient);
    } else if (gcd(e.modulus, base_minus_one).degree() == Degree(0)) {
        // gcd(M, B) = 1 already holds for any Expansion
        report.kind = SumCase::coprime;
    }
    return report;
}

Poly average_digit(const Expansion& e) {
    const FieldCtx& ctx = e.modulus.ctx();
    const std::uint64_t t_mod_p = e.period % ctx.characteristic();
    if (t_mod_p == 0) {
        throw PeriodDivisibleByCharacteristic(
            "the average digit of 1/" + to_string(e.modulus) + " is undefined: the period " +
            std::to_string(e.period) + " is divisible by the characteristic " +
            std::to_string(ctx.characteristic()) +
            " (cannot happen for an irreducible modulus)");
    }
    DigitSumReport report = digit_sum(e);
    return FieldElem::from_int(t_mod_p, ctx).inverse() * report.sum;
}

std::string to_string(SumCase c) {
    switch (c) {
        case SumCase::coprime: return "coprime";
        case SumCase::period_one: return "period_one";
        case SumCase::other: return "other";
    }
    throw std::logic_error("unreachable");
}

namespace {

SweepRecord make_record(const Expansion& e, const DigitSumReport& rep) {
    SweepRecord r;
    r.modulus = to_string(e.modulus);
    r.base = to_string(e.base);
    r.period = e.period;
    r.digits.reserve(e.digits.size());
    for (const Poly& d : e.digits) r.digits.push_back(to_string(d, "x", TermOrder::ascending));
    r.digit_sum = to_string(rep.sum, "x", TermOrder::ascending);
    r.kind = rep.kind;
    return r;
}

[[noreturn]] void sweep_fail(const Poly& M, const std::string& what) {
    throw VerificationFailure("sweep failure at M = " + to_string(M) + ": " + what);
}

}  // namespace

SweepReport sweep(const FieldCtx& ctx, const Poly& base, unsigned max_degree) {
    if (base.degree() < Degree(1)) throw ConstantBase("the base must have degree >= 1");
    if (max_degree < 1) throw std::invalid_argument("max degree must be at least 1");
    const auto t0 = std::chrono::steady_clock::now();

    const Poly base_minus_one = base - Poly::one(ctx);
    SweepReport report{ctx.describe(), to_string(base), max_degree, {}, 0, 0.0, {}};

    for (unsigned d = 1; d <= max_degree; ++d) {
        std::uint64_t coprime_count = 0;
        std::uint64_t period_one_count = 0;
        for (const Poly& M : monic_polys(ctx, d)) {
            const bool coprime_base = gcd(M, base).degree() == Degree(0);
            if (!coprime_base) continue;  // no purely periodic expansion
            const bool divides = divmod(base_minus_one, M).remainder.is_zero();
            const bool coprime_bm1 = gcd(M, base_minus_one).degree() == Degree(0);
            if (!divides && !coprime_bm1) continue;  // the unasserted "other" case

            const Expansion e1 = expand_longdiv(M, base);
            const Expansion e2 = expand_via_cofactor(M, base);
            if (e1.period != e2.period || e1.digits != e2.digits) {
                sweep_fail(M, "expansion engines disagree");
            }
            const DigitSumReport rep = digit_sum(e1);

            if (coprime_bm1) {
                if (rep.kind != SumCase::coprime) sweep_fail(M, "misclassified digit sum case");
                if (!rep.sum.is_zero()) {
                    sweep_fail(M, "nonzero digit sum " + to_string(rep.sum));
                }
                ++coprime_count;
            } else {
                if (rep.kind != SumCase::period_one || !rep.cofactor.has_value()) {
                    sweep_fail(M, "misclassified digit sum case");
                }
                if (e1.period != 1) {
                    sweep_fail(M, "period " + std::to_string(e1.period) + " in the B=1 mod M case");
                }
                if (rep.sum != *rep.cofactor) sweep_fail(M, "digit sum differs from the cofactor");
                if (*rep.cofactor * M != base_minus_one) {
                    sweep_fail(M, "cofactor identity K*M = B-1 fails");
                }
                ++period_one_count;
            }
            report.records.push_back(make_record(e1, rep));
        }
        report.per_degree.push_back({d, coprime_count, period_one_count});
    }

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace fqdigits
