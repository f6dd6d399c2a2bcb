#include <doctest.h>

#include <vector>

#include "fqdigits/field.hpp"

using namespace fqdigits;

namespace {

// the exhaustively checked small fields, q <= 9
std::vector<FieldCtx> small_fields() {
    return {
        FieldCtx::make(2),
        FieldCtx::make(3),
        FieldCtx::make(5),
        FieldCtx::make(7),
        FieldCtx::make(2, 2, {{1, 1, 1}}),     // F_4 = F_2[t]/(t^2+t+1)
        FieldCtx::make(2, 3, {{1, 1, 0, 1}}),  // F_8 = F_2[t]/(t^3+t+1)
        FieldCtx::make(3, 2, {{1, 0, 1}}),     // F_9 = F_3[t]/(t^2+1)
    };
}

}  // namespace

TEST_CASE("field construction validates its inputs") {
    const FieldCtx f2 = FieldCtx::make(2);
    CHECK(f2.characteristic() == 2);
    CHECK(f2.ext_degree() == 1);
    CHECK(f2.order() == 2);

    const FieldCtx f4 = FieldCtx::make(2, 2, {{1, 1, 1}});
    CHECK(f4.order() == 4);
    CHECK(f4.describe() == "F_4 = F_2[t]/(t^2+t+1)");

    CHECK_THROWS_AS(FieldCtx::make(4), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldCtx::make(1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldCtx::make(2, 2), MissingModulus);
    // t^2+1 = (t+1)^2 over F_2
    CHECK_THROWS_AS(FieldCtx::make(2, 2, {{1, 0, 1}}), ReducibleModulus);
    // t^2+t = t(t+1)
    CHECK_THROWS_AS(FieldCtx::make(2, 2, {{0, 1, 1}}), ReducibleModulus);

    std::vector<std::uint64_t> big_mod(41, 0);
    big_mod[0] = 1;
    big_mod[40] = 1;
    CHECK_THROWS_AS(FieldCtx::make(2, 40, big_mod), OrderOverflow);
    CHECK_THROWS_AS(FieldCtx::make(4294967311ull, 1), OrderOverflow);  // prime above the cap
}

TEST_CASE("arithmetic matches the small hand-checked values") {
    const FieldCtx f2 = FieldCtx::make(2);
    const auto one2 = FieldElem::one(f2);
    CHECK((one2 + one2).is_zero());
    CHECK(one2.inverse() == one2);

    const FieldCtx f3 = FieldCtx::make(3);
    const auto two3 = FieldElem::from_int(2, f3);
    CHECK(two3 * two3 == FieldElem::one(f3));

    const FieldCtx f5 = FieldCtx::make(5);
    CHECK(FieldElem::from_int(2, f5).inverse() == FieldElem::from_int(3, f5));

    const FieldCtx f4 = FieldCtx::make(2, 2, {{1, 1, 1}});
    const auto t = FieldElem::from_int(2, f4);      // encoding of t
    const auto t1 = FieldElem::from_int(3, f4);     // t + 1
    CHECK(t * t == t1);                             // t^2 = t + 1
    CHECK(t.inverse() == t1);                       // t(t+1) = 1
    CHECK(to_string(t1) == "t+1");
}

TEST_CASE("canonical integer encoding is a bijection") {
    for (const FieldCtx& f : small_fields()) {
        for (std::uint64_t n = 0; n < f.order(); ++n) {
            CHECK(FieldElem::from_int(n, f).to_int() == n);
        }
        CHECK_THROWS_AS(FieldElem::from_int(f.order(), f), OutOfRange);
    }
    const FieldCtx f4 = FieldCtx::make(2, 2, {{1, 1, 1}});
    CHECK(to_string(FieldElem::from_int(3, f4)) == "t+1");  // 3 = 1 + 1*2 in base 2

    const auto f2_all = all_elements(FieldCtx::make(2));
    REQUIRE(f2_all.size() == 2);
    CHECK(f2_all[0].is_zero());
    CHECK(f2_all[1].is_one());
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (const FieldCtx& f : small_fields()) {
        const auto elems = all_elements(f);
        for (const auto& a : elems) {
            for (const auto& b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (const auto& c : elems) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("inverses and Frobenius hold exhaustively for q <= 9") {
    for (const FieldCtx& f : small_fields()) {
        const auto one = FieldElem::one(f);
        for (const auto& a : all_elements(f)) {
            CHECK(a.pow(f.order()) == a);  // a^q = a
            if (!a.is_zero()) CHECK(a * a.inverse() == one);
        }
        CHECK_THROWS_AS(FieldElem::zero(f).inverse(), ZeroInverse);
    }
}

TEST_CASE("elements of different fields do not mix") {
    const FieldCtx f2 = FieldCtx::make(2);
    const FieldCtx f3 = FieldCtx::make(3);
    CHECK_THROWS_AS(FieldElem::one(f2) + FieldElem::one(f3), CtxMismatch);
    CHECK_THROWS_AS(FieldElem::one(f2) == FieldElem::one(f3), CtxMismatch);

    // equal field descriptions are interchangeable even as distinct objects
    const FieldCtx f4a = FieldCtx::make(2, 2, {{1, 1, 1}});
    const FieldCtx f4b = FieldCtx::make(2, 2, {{1, 1, 1}});
    CHECK(FieldElem::from_int(2, f4a) * FieldElem::from_int(2, f4b) ==
          FieldElem::from_int(3, f4a));
}
