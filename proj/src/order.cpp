#include "fqdigits/order.hpp"

#include <stdexcept>

#include "fqdigits/numeric.hpp"

namespace fqdigits {

namespace {

void check_inputs(const Poly& base, const Poly& modulus) {
    if (modulus.degree() < Degree(1)) {
        throw ConstantModulus("the multiplicative order requires deg M >= 1");
    }
    if (gcd(base, modulus).degree() != Degree(0)) {
        throw NotCoprime("the base is not a unit modulo " + to_string(modulus));
    }
}

}  // namespace

OrderResult mul_order(const Poly& base, const Poly& modulus) {
    check_inputs(base, modulus);
    const std::uint64_t phi = totient(modulus);
    const Poly unit = Poly::one(base.ctx());

    std::uint64_t t = phi;
    for (const auto& [r, e] : factor_u64(phi)) {
        (void)e;
        while (t % r == 0 && powmod(base, t / r, modulus) == unit) t /= r;
    }

    // minimality certificate: B^T = 1 and B^{T/r} != 1 for every prime r | T
    if (powmod(base, t, modulus) != unit) {
        throw std::logic_error("order reduction produced a non-annihilating exponent");
    }
    for (const auto& [r, e] : factor_u64(t)) {
        (void)e;
        if (powmod(base, t / r, modulus) == unit) {
            throw std::logic_error("order reduction produced a non-minimal exponent");
        }
    }
    return {t, phi, OrderMethod::phi_reduction};
}

OrderResult mul_order_bruteforce(const Poly& base, const Poly& modulus, std::uint64_t cap) {
    check_inputs(base, modulus);
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    const Poly unit = Poly::one(base.ctx());
    const Poly b = divmod(base, modulus).remainder;

    Poly acc = b;
    std::uint64_t t = 1;
    while (acc != unit) {
        if (t >= cap) {
            throw CapExceeded("no power of the base reached 1 within " + std::to_string(cap) +
                              " iterations");
        }
        acc = divmod(acc * b, modulus).remainder;
        ++t;
    }
    return {t, totient(modulus), OrderMethod::bruteforce};
}

}  // namespace fqdigits
