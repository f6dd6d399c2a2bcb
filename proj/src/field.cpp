#include "fqdigits/field.hpp"

#include <algorithm>
#include <utility>

#include "fqdigits/numeric.hpp"

namespace fqdigits {

struct FieldCtx::Impl {
    std::uint64_t p;
    unsigned k;
    std::uint64_t q;
    std::vector<std::uint64_t> modulus;  // k+1 residues, monic; empty for k = 1
};

namespace {

// q = p^k is capped so that every residue product fits in uint64 without
// wide arithmetic (and q^d stays checkable for the degrees this tool sweeps)
constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 32;

using FpVec = std::vector<std::uint64_t>;  // dense F_p[t], index i = coeff of t^i, no trailing zeros

void fp_trim(FpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpVec fp_mul(const FpVec& a, const FpVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpVec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    fp_trim(out);
    return out;
}

FpVec fp_sub(const FpVec& a, const FpVec& b, std::uint64_t p) {
    FpVec out = a;
    if (b.size() > out.size()) out.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = (out[i] + p - b[i]) % p;
    }
    fp_trim(out);
    return out;
}

// remainder of a mod m; m monic or not (leading coefficient inverted mod p)
FpVec fp_rem(FpVec a, const FpVec& m, std::uint64_t p) {
    const std::uint64_t lc_inv = pow_mod_u64(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = a.back() * lc_inv % p;
        const std::size_t shift = a.size() - m.size();
        if (c != 0) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                a[shift + j] = (a[shift + j] + c * (p - m[j] % p)) % p;
            }
        }
        a.pop_back();
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpVec fp_gcd(FpVec a, FpVec b, std::uint64_t p) {
    while (!b.empty()) {
        FpVec r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FpVec fp_powmod(FpVec base, std::uint64_t e, const FpVec& m, std::uint64_t p) {
    FpVec acc = fp_rem({1}, m, p);
    base = fp_rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) acc = fp_rem(fp_mul(acc, base, p), m, p);
        base = fp_rem(fp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

// Rabin: monic f of degree k is irreducible over F_p iff x^{p^k} = x mod f
// and gcd(x^{p^{k/r}} - x, f) = 1 for every prime r | k
bool fp_irreducible(const FpVec& f, unsigned k, std::uint64_t p) {
    const FpVec x = {0, 1};
    auto frobenius = [&](unsigned steps) {
        FpVec g = fp_rem(x, f, p);
        for (unsigned i = 0; i < steps; ++i) g = fp_powmod(std::move(g), p, f, p);
        return g;
    };
    if (frobenius(k) != fp_rem(x, f, p)) return false;
    for (const auto& [r, e] : factor_u64(k)) {
        (void)e;
        FpVec g = fp_sub(frobenius(k / static_cast<unsigned>(r)), x, p);
        FpVec d = fp_gcd(f, std::move(g), p);
        if (d.size() != 1) return false;
    }
    return true;
}

FpVec decode(std::uint64_t rep, std::uint64_t p, unsigned k) {
    FpVec digits(k, 0);
    for (unsigned i = 0; i < k; ++i) {
        digits[i] = rep % p;
        rep /= p;
    }
    return digits;
}

std::uint64_t encode(const FpVec& digits, std::uint64_t p, unsigned k) {
    std::uint64_t rep = 0;
    for (unsigned i = k; i-- > 0;) rep = rep * p + (i < digits.size() ? digits[i] : 0);
    return rep;
}

std::string render_tpoly(const FpVec& digits) {
    std::string out;
    for (std::size_t j = digits.size(); j-- > 0;) {
        if (digits[j] == 0) continue;
        if (!out.empty()) out += '+';
        if (j == 0) {
            out += std::to_string(digits[j]);
            continue;
        }
        if (digits[j] != 1) {
            out += std::to_string(digits[j]);
            out += '*';
        }
        out += 't';
        if (j > 1) out += '^' + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

FieldCtx FieldCtx::make(std::uint64_t p, unsigned k,
                        const std::optional<std::vector<std::uint64_t>>& modulus) {
    if (!is_prime_u64(p)) {
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    }
    if (k < 1) throw std::invalid_argument("extension degree must be at least 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > kOrderCap / p) {
            throw OrderOverflow("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                " exceeds the supported range (2^32)");
        }
        q *= p;
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = q;

    if (k == 1) {
        if (modulus.has_value()) {
            throw std::invalid_argument("a modulus is only meaningful for extension degree > 1");
        }
        return FieldCtx(std::move(impl));
    }

    if (!modulus.has_value()) {
        throw MissingModulus("extension degree " + std::to_string(k) +
                             " requires an irreducible modulus over F_" + std::to_string(p));
    }
    const auto& m = *modulus;
    if (m.size() != static_cast<std::size_t>(k) + 1 || m.back() != 1) {
        throw std::invalid_argument("modulus must be monic of degree exactly " + std::to_string(k));
    }
    for (std::uint64_t c : m) {
        if (c >= p) throw std::invalid_argument("modulus coefficients must be residues mod p");
    }
    if (!fp_irreducible(m, k, p)) {
        throw ReducibleModulus("modulus " + render_tpoly(m) + " is reducible over F_" +
                               std::to_string(p));
    }
    impl->modulus = m;
    return FieldCtx(std::move(impl));
}

std::uint64_t FieldCtx::characteristic() const noexcept { return impl_->p; }
unsigned FieldCtx::ext_degree() const noexcept { return impl_->k; }
std::uint64_t FieldCtx::order() const noexcept { return impl_->q; }
const std::vector<std::uint64_t>& FieldCtx::modulus() const noexcept { return impl_->modulus; }

FieldCtx FieldCtx::prime_subfield() const {
    return impl_->k == 1 ? *this : make(impl_->p);
}

bool FieldCtx::same_field(const FieldCtx& other) const noexcept {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->k == other.impl_->k &&
           impl_->modulus == other.impl_->modulus;
}

std::uint64_t FieldCtx::add(std::uint64_t a, std::uint64_t b) const {
    const auto& d = *impl_;
    if (d.k == 1) return (a + b) % d.p;
    std::uint64_t rep = 0, scale = 1;
    for (unsigned i = 0; i < d.k; ++i) {
        rep += (a % d.p + b % d.p) % d.p * scale;
        a /= d.p;
        b /= d.p;
        scale *= d.p;
    }
    return rep;
}

std::uint64_t FieldCtx::neg(std::uint64_t a) const {
    const auto& d = *impl_;
    if (d.k == 1) return (d.p - a) % d.p;
    std::uint64_t rep = 0, scale = 1;
    for (unsigned i = 0; i < d.k; ++i) {
        rep += (d.p - a % d.p) % d.p * scale;
        a /= d.p;
        scale *= d.p;
    }
    return rep;
}

std::uint64_t FieldCtx::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const {
    const auto& d = *impl_;
    if (d.k == 1) return a * b % d.p;
    const FpVec da = decode(a, d.p, d.k);
    const FpVec db = decode(b, d.p, d.k);
    FpVec buf(2 * d.k - 1, 0);
    for (unsigned i = 0; i < d.k; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < d.k; ++j) {
            buf[i + j] = (buf[i + j] + da[i] * db[j]) % d.p;
        }
    }
    // reduce by the monic modulus: t^{k+s} = -(m_0 + ... + m_{k-1} t^{k-1}) t^s
    for (std::size_t i = buf.size(); i-- > d.k;) {
        const std::uint64_t c = buf[i];
        if (c == 0) continue;
        buf[i] = 0;
        const std::size_t shift = i - d.k;
        for (unsigned j = 0; j < d.k; ++j) {
            buf[shift + j] = (buf[shift + j] + c * (d.p - d.modulus[j]) % d.p) % d.p;
        }
    }
    buf.resize(d.k);
    return encode(buf, d.p, d.k);
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
    if (a == 0) throw ZeroInverse("zero has no multiplicative inverse");
    return pow(a, impl_->q - 2);
}

std::string FieldCtx::describe() const {
    const auto& d = *impl_;
    if (d.k == 1) return "F_" + std::to_string(d.p);
    return "F_" + std::to_string(d.q) + " = F_" + std::to_string(d.p) + "[t]/(" +
           render_tpoly(d.modulus) + ")";
}

FieldElem FieldElem::from_int(std::uint64_t n, const FieldCtx& ctx) {
    if (n >= ctx.order()) {
        throw OutOfRange("element encoding " + std::to_string(n) + " outside [0, " +
                         std::to_string(ctx.order()) + ")");
    }
    return FieldElem(ctx, n);
}

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
    if (!a.ctx().same_field(b.ctx())) {
        throw CtxMismatch("operands belong to different fields: " + a.ctx().describe() + " vs " +
                          b.ctx().describe());
    }
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.ctx_, a.ctx_.add(a.rep_, b.rep_));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.ctx_, a.ctx_.sub(a.rep_, b.rep_));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.ctx_, a.ctx_.mul(a.rep_, b.rep_));
}

FieldElem FieldElem::operator-() const { return FieldElem(ctx_, ctx_.neg(rep_)); }

FieldElem FieldElem::inverse() const { return FieldElem(ctx_, ctx_.inv(rep_)); }

FieldElem FieldElem::pow(std::uint64_t e) const { return FieldElem(ctx_, ctx_.pow(rep_, e)); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return a.rep_ == b.rep_;
}

std::vector<FieldElem> all_elements(const FieldCtx& ctx) {
    std::vector<FieldElem> out;
    out.reserve(ctx.order());
    for (std::uint64_t n = 0; n < ctx.order(); ++n) out.push_back(FieldElem::from_int(n, ctx));
    return out;
}

std::string to_string(const FieldElem& a) {
    const auto& ctx = a.ctx();
    if (ctx.ext_degree() == 1) return std::to_string(a.to_int());
    return render_tpoly(decode(a.to_int(), ctx.characteristic(), ctx.ext_degree()));
}

}  // namespace fqdigits
