#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "fqdigits/digits.hpp"
#include "fqdigits/order.hpp"

using namespace fqdigits;

namespace {

FieldCtx f2() { return FieldCtx::make(2); }
FieldCtx f3() { return FieldCtx::make(3); }
FieldCtx f4() { return FieldCtx::make(2, 2, {{1, 1, 1}}); }
Poly P(const FieldCtx& ctx, const char* text) { return parse_poly(text, ctx); }

std::vector<std::string> digit_strings(const Expansion& e) {
    std::vector<std::string> out;
    for (const Poly& d : e.digits) out.push_back(to_string(d, "x", TermOrder::ascending));
    return out;
}

// the three invariants every produced expansion must satisfy
void check_expansion_invariants(const Expansion& e) {
    // digit-degree bound
    for (const Poly& d : e.digits) CHECK(d.degree() < e.base.degree());

    // reconstruction: (sum a_j B^{T-j}) * M = B^T - 1, via Horner
    Poly value(e.base.ctx());
    for (const Poly& d : e.digits) value = value * e.base + d;
    CHECK(value * e.modulus == pow(e.base, e.period) - Poly::one(e.base.ctx()));

    // minimality: no proper divisor of T is a period of the digit string
    for (std::uint64_t d = 1; d < e.period; ++d) {
        if (e.period % d != 0) continue;
        bool periodic = true;
        for (std::uint64_t j = d; j < e.period; ++j) {
            if (e.digits[j] != e.digits[j % d]) {
                periodic = false;
                break;
            }
        }
        CHECK_FALSE(periodic);
    }
}

}  // namespace

TEST_CASE("long-division engine reproduces the reference rows") {
    const auto ctx = f2();
    auto e = expand_longdiv(P(ctx, "x^3+x+1"), P(ctx, "x"));
    CHECK(e.period == 7);
    CHECK(digit_strings(e) == std::vector<std::string>{"0", "0", "1", "0", "1", "1", "1"});

    e = expand_longdiv(P(ctx, "x^3+x+1"), P(ctx, "x^2+x"));
    CHECK(e.period == 7);
    CHECK(digit_strings(e) == std::vector<std::string>{"0", "x", "1", "x", "1+x", "1+x", "1"});

    e = expand_longdiv(P(ctx, "x^4+x^3+x^2+x+1"), P(ctx, "x"));
    CHECK(e.period == 5);
    CHECK(digit_strings(e) == std::vector<std::string>{"0", "0", "0", "1", "1"});
}

TEST_CASE("cofactor engine reproduces the reference rows") {
    const auto ctx = f2();
    auto e = expand_via_cofactor(P(ctx, "x^2+x+1"), P(ctx, "x"));
    CHECK(e.period == 3);
    CHECK(digit_strings(e) == std::vector<std::string>{"0", "1", "1"});

    e = expand_via_cofactor(P(ctx, "x^4+x+1"), P(ctx, "x^2+x"));
    CHECK(e.period == 3);
    CHECK(digit_strings(e) == std::vector<std::string>{"0", "1", "1"});

    // period one: B = 1 mod M gives 1/M = 0.(K) with K = (B-1)/M
    e = expand_via_cofactor(P(ctx, "x+1"), P(ctx, "x^2"));
    CHECK(e.period == 1);
    CHECK(digit_strings(e) == std::vector<std::string>{"1+x"});  // (x^2+1)/(x+1) = x+1
}

TEST_CASE("base_digits") {
    const auto ctx = f2();
    const Poly B = P(ctx, "x");
    auto ks = base_digits(P(ctx, "x+1"), B);
    REQUIRE(ks.size() == 2);
    CHECK(ks[0].is_one());
    CHECK(ks[1].is_one());
    // reconstruction oracle
    Poly v(ctx);
    for (std::size_t j = ks.size(); j-- > 0;) v = v * B + ks[j];
    CHECK(v == P(ctx, "x+1"));

    CHECK(base_digits(Poly(ctx), B).empty());

    const Poly B2 = P(ctx, "x^2+x");
    auto cube = base_digits(pow(B2, 3), B2);
    REQUIRE(cube.size() == 4);
    CHECK(cube[0].is_zero());
    CHECK(cube[1].is_zero());
    CHECK(cube[2].is_zero());
    CHECK(cube[3].is_one());

    CHECK_THROWS_AS(base_digits(P(ctx, "x"), P(ctx, "1")), ConstantBase);
}

TEST_CASE("digit sums and case classification") {
    const auto ctx = f2();
    // table row x^3+x^2+1 in base x: digits 0,0,1,1,1,0,1 sum to 0 over F_2
    auto rep = digit_sum(expand_longdiv(P(ctx, "x^3+x^2+1"), P(ctx, "x")));
    CHECK(rep.kind == SumCase::coprime);
    CHECK(rep.sum.is_zero());
    CHECK(rep.period == 7);

    // table row x^4+x^3+1 in base x^2+x
    rep = digit_sum(expand_longdiv(P(ctx, "x^4+x^3+1"), P(ctx, "x^2+x")));
    CHECK(rep.kind == SumCase::coprime);
    CHECK(rep.sum.is_zero());

    // period one: M = x+1, B = x^2: S = K = x+1
    rep = digit_sum(expand_longdiv(P(ctx, "x+1"), P(ctx, "x^2")));
    CHECK(rep.kind == SumCase::period_one);
    CHECK(rep.period == 1);
    CHECK(rep.sum == P(ctx, "x+1"));
    REQUIRE(rep.cofactor.has_value());
    CHECK(*rep.cofactor == P(ctx, "x+1"));

    // gcd(M, B-1) nontrivial without B = 1 mod M: reported, nothing asserted
    rep = digit_sum(expand_longdiv(P(ctx, "x^2+1"), P(ctx, "x")));  // M = (x+1)^2, B-1 = x+1
    CHECK(rep.kind == SumCase::other);
}

TEST_CASE("average digit") {
    const auto ctx = f2();
    // irreducible modulus coprime to B(B-1): S = 0 hence A = 0
    CHECK(average_digit(expand_longdiv(P(ctx, "x^3+x+1"), P(ctx, "x"))).is_zero());

    // T = 6 is divisible by the characteristic: undefined
    CHECK_THROWS_AS(average_digit(expand_longdiv(P(ctx, "x^4+x^2+1"), P(ctx, "x"))),
                    PeriodDivisibleByCharacteristic);

    // period one: T = 1, A = S = K
    CHECK(average_digit(expand_longdiv(P(ctx, "x+1"), P(ctx, "x^2"))) == P(ctx, "x+1"));

    // over F_3, M = x^2+1 (irreducible), B = x: T = 4, A = S / (4 mod 3)
    const auto c3 = f3();
    const auto e3 = expand_longdiv(P(c3, "x^2+1"), P(c3, "x"));
    CHECK(e3.period == 4);
    const auto s3 = digit_sum(e3).sum;
    CHECK(average_digit(e3) == FieldElem::from_int(1, c3) * s3);
}

TEST_CASE("expansion error conditions") {
    const auto ctx = f2();
    CHECK_THROWS_AS(expand_longdiv(P(ctx, "x^2"), P(ctx, "x")), NotCoprime);
    CHECK_THROWS_AS(expand_longdiv(P(ctx, "x^2+x+1"), P(ctx, "1")), ConstantBase);
    CHECK_THROWS_AS(expand_longdiv(P(ctx, "1"), P(ctx, "x")), ConstantModulus);
    CHECK_THROWS_AS(expand_via_cofactor(P(ctx, "x^2"), P(ctx, "x")), NotCoprime);
}

TEST_CASE("engines agree digit-for-digit on full small ranges") {
    const auto c2 = f2();
    for (const char* base : {"x", "x+1", "x^2+x", "x^2+x+1"}) {
        const Poly B = P(c2, base);
        for (unsigned d = 1; d <= 7; ++d) {
            for (const Poly& M : monic_polys(c2, d)) {
                if (gcd(M, B).degree() != Degree(0)) continue;
                const Expansion e1 = expand_longdiv(M, B);
                const Expansion e2 = expand_via_cofactor(M, B);
                CHECK(e1.period == e2.period);
                CHECK(e1.digits == e2.digits);
                CHECK(e1.period == mul_order(B, M).order);
            }
        }
    }
    for (const FieldCtx& fld : {f3(), f4()}) {
        const Poly B = parse_poly("x", fld);
        for (unsigned d = 1; d <= 4; ++d) {
            for (const Poly& M : monic_polys(fld, d)) {
                if (gcd(M, B).degree() != Degree(0)) continue;
                const Expansion e1 = expand_longdiv(M, B);
                const Expansion e2 = expand_via_cofactor(M, B);
                CHECK(e1.period == e2.period);
                CHECK(e1.digits == e2.digits);
            }
        }
    }
}

TEST_CASE("expansion invariants on sampled moduli") {
    const auto c2 = f2();
    for (const char* m : {"x^3+x+1", "x^4+x^2+1", "x^5+x^4+x^3+x+1", "x^2+1"}) {
        check_expansion_invariants(expand_longdiv(P(c2, m), P(c2, "x")));
    }
    for (const char* m : {"x^3+x^2+1", "x^4+x^3+1"}) {
        check_expansion_invariants(expand_longdiv(P(c2, m), P(c2, "x^2+x")));
    }
    const auto c3 = f3();
    for (const char* m : {"x^2+1", "x^3+2*x+1", "2*x^3+2*x+2"}) {
        check_expansion_invariants(expand_longdiv(P(c3, m), P(c3, "x")));
    }
}

TEST_CASE("purely periodic remainders: r_j = B^j mod M reaches 1 only at T") {
    const auto ctx = f2();
    const Poly M = P(ctx, "x^4+x+1");
    const Poly B = P(ctx, "x");
    const Expansion e = expand_longdiv(M, B);
    const Poly one = Poly::one(ctx);
    for (std::uint64_t j = 1; j < e.period; ++j) CHECK(powmod(B, j, M) != one);
    CHECK(powmod(B, e.period, M) == one);
}

TEST_CASE("non-monic moduli scale the digits by the inverse leading coefficient") {
    const auto c3 = f3();
    const Poly M = P(c3, "x^2+1");
    const Poly M2 = P(c3, "2*x^2+2");  // 2 * M
    const Poly B = P(c3, "x");
    const Expansion e1 = expand_longdiv(M, B);
    const Expansion e2 = expand_longdiv(M2, B);
    REQUIRE(e1.period == e2.period);
    const FieldElem inv2 = FieldElem::from_int(2, c3).inverse();
    for (std::size_t j = 0; j < e1.digits.size(); ++j) {
        CHECK(e2.digits[j] == inv2 * e1.digits[j]);
    }
    check_expansion_invariants(e2);
    // the vanishing conclusion is unchanged
    CHECK(digit_sum(e2).sum.is_zero());
}

TEST_CASE("sweep visits the right moduli and verifies them") {
    const auto c2 = f2();
    const SweepReport r = sweep(c2, P(c2, "x"), 4);
    CHECK(r.failures == 0);
    REQUIRE(r.per_degree.size() == 4);
    CHECK(r.per_degree[0].coprime_count == 0);
    CHECK(r.per_degree[0].period_one_count == 1);  // x+1 divides B-1
    CHECK(r.per_degree[1].coprime_count == 1);
    CHECK(r.per_degree[2].coprime_count == 2);
    CHECK(r.per_degree[3].coprime_count == 4);

    const SweepReport r2 = sweep(c2, P(c2, "x^2+x"), 4);
    std::uint64_t coprime_total = 0;
    for (const auto& pd : r2.per_degree) coprime_total += pd.coprime_count;
    CHECK(coprime_total == 5);  // the five reference rows
    // B - 1 = x^2+x+1 is irreducible: exactly one period-one modulus
    std::uint64_t period_one_total = 0;
    for (const auto& pd : r2.per_degree) period_one_total += pd.period_one_count;
    CHECK(period_one_total == 1);

    // base x^2+x+1 over F_2: B-1 = x(x+1) has three monic nonconstant divisors
    const SweepReport r3 = sweep(c2, P(c2, "x^2+x+1"), 4);
    std::uint64_t p1 = 0;
    for (const auto& pd : r3.per_degree) p1 += pd.period_one_count;
    CHECK(p1 == 3);

    CHECK(sweep(f3(), parse_poly("x", f3()), 3).failures == 0);

    // records arrive in canonical order with the right schema
    REQUIRE(!r.records.empty());
    CHECK(r.records.front().modulus == "x+1");
    CHECK(r.records.front().kind == SumCase::period_one);
    CHECK(r.records[1].modulus == "x^2+x+1");
    CHECK(r.records[1].period == 3);
    CHECK(r.records[1].digits == std::vector<std::string>{"0", "1", "1"});
}
