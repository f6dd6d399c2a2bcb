#include <doctest.h>

#include "fqdigits/order.hpp"

using namespace fqdigits;

namespace {

FieldCtx f2() { return FieldCtx::make(2); }
Poly P(const FieldCtx& ctx, const char* text) { return parse_poly(text, ctx); }

}  // namespace

TEST_CASE("orders from the reference tables") {
    const auto ctx = f2();
    CHECK(mul_order(P(ctx, "x"), P(ctx, "x^2+x+1")).order == 3);
    CHECK(mul_order(P(ctx, "x"), P(ctx, "x^3+x+1")).order == 7);
    CHECK(mul_order(P(ctx, "x"), P(ctx, "x^3+x^2+1")).order == 7);
    CHECK(mul_order(P(ctx, "x"), P(ctx, "x^4+x^3+1")).order == 15);
    CHECK(mul_order(P(ctx, "x"), P(ctx, "x^4+x+1")).order == 15);
    CHECK(mul_order(P(ctx, "x"), P(ctx, "x^4+x^3+x^2+x+1")).order == 5);
    CHECK(mul_order(P(ctx, "x"), P(ctx, "x^4+x^2+1")).order == 6);
    CHECK(mul_order(P(ctx, "x^2+x"), P(ctx, "x^4+x+1")).order == 3);

    const auto r = mul_order(P(ctx, "x"), P(ctx, "x^4+x+1"));
    CHECK(r.phi == 15);
    CHECK(r.method == OrderMethod::phi_reduction);
}

TEST_CASE("bruteforce oracle on the same values") {
    const auto ctx = f2();
    CHECK(mul_order_bruteforce(P(ctx, "x"), P(ctx, "x^2+x+1"), 100).order == 3);
    CHECK(mul_order_bruteforce(P(ctx, "x"), P(ctx, "x^4+x^2+1")).order == 6);
    CHECK(mul_order_bruteforce(P(ctx, "x^2+x+1"), P(ctx, "x^2+x")).order == 1);  // B = 1 mod M
    CHECK(mul_order_bruteforce(P(ctx, "x"), P(ctx, "x^4+x^3+1"), 15).order == 15);  // exactly at cap
}

TEST_CASE("bruteforce cap") {
    const auto ctx = f2();
    CHECK_THROWS_AS(mul_order_bruteforce(P(ctx, "x"), P(ctx, "x^4+x^3+1"), 10), CapExceeded);
}

TEST_CASE("error conditions") {
    const auto ctx = f2();
    CHECK_THROWS_AS(mul_order(P(ctx, "x"), P(ctx, "x^2+x")), NotCoprime);
    CHECK_THROWS_AS(mul_order(P(ctx, "x"), P(ctx, "1")), ConstantModulus);
    CHECK_THROWS_AS(mul_order(Poly(ctx), P(ctx, "x+1")), NotCoprime);  // gcd(0, M) = M
}

TEST_CASE("fast path equals bruteforce on full small ranges") {
    const auto ctx = f2();
    for (const char* base : {"x", "x+1", "x^2+x"}) {
        const Poly B = P(ctx, base);
        for (unsigned d = 1; d <= 6; ++d) {
            for (const Poly& M : monic_polys(ctx, d)) {
                if (gcd(B, M).degree() != Degree(0)) continue;
                const auto fast = mul_order(B, M);
                const auto slow = mul_order_bruteforce(B, M);
                CHECK(fast.order == slow.order);
                CHECK(fast.phi % fast.order == 0);  // T | phi(M)
                CHECK((fast.order == 1) == divmod(B - Poly::one(ctx), M).remainder.is_zero());
                if (divmod(B, M).remainder != Poly::one(ctx)) CHECK(fast.order >= 2);
            }
        }
    }

    const auto f3 = FieldCtx::make(3);
    const Poly x3 = parse_poly("x", f3);
    for (unsigned d = 1; d <= 4; ++d) {
        for (const Poly& M : monic_polys(f3, d)) {
            if (gcd(x3, M).degree() != Degree(0)) continue;
            CHECK(mul_order(x3, M).order == mul_order_bruteforce(x3, M).order);
        }
    }
}
