#include "fqdigits/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fqdigits/numeric.hpp"

namespace fqdigits {

int Degree::value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial has no integer value");
    return v_;
}

namespace {

void require_same(const Poly& f, const Poly& g) {
    if (!f.ctx().same_field(g.ctx())) {
        throw CtxMismatch("polynomials belong to different fields: " + f.ctx().describe() +
                          " vs " + g.ctx().describe());
    }
}

void strip(std::vector<std::uint64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly Poly::from_coeffs(const FieldCtx& ctx, std::vector<std::uint64_t> encoded) {
    for (std::uint64_t v : encoded) {
        if (v >= ctx.order()) {
            throw OutOfRange("coefficient encoding " + std::to_string(v) + " outside [0, " +
                             std::to_string(ctx.order()) + ")");
        }
    }
    strip(encoded);
    Poly f(ctx);
    f.c_ = std::move(encoded);
    return f;
}

Poly Poly::constant(const FieldElem& c) {
    Poly f(c.ctx());
    if (!c.is_zero()) f.c_ = {c.to_int()};
    return f;
}

Poly Poly::monomial(const FieldCtx& ctx, unsigned d, std::uint64_t encoded_coeff) {
    if (encoded_coeff >= ctx.order()) throw OutOfRange("monomial coefficient outside the field");
    Poly f(ctx);
    if (encoded_coeff != 0) {
        f.c_.assign(d + 1, 0);
        f.c_.back() = encoded_coeff;
    }
    return f;
}

FieldElem Poly::coeff(std::size_t i) const { return FieldElem::from_int(coeff_encoded(i), ctx_); }

FieldElem Poly::leading_coeff() const {
    if (c_.empty()) throw ZeroInput("the zero polynomial has no leading coefficient");
    return FieldElem::from_int(c_.back(), ctx_);
}

Poly operator+(const Poly& f, const Poly& g) {
    require_same(f, g);
    std::vector<std::uint64_t> out(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.ctx_.add(f.coeff_encoded(i), g.coeff_encoded(i));
    }
    strip(out);
    Poly r(f.ctx_);
    r.c_ = std::move(out);
    return r;
}

Poly operator-(const Poly& f, const Poly& g) {
    require_same(f, g);
    std::vector<std::uint64_t> out(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.ctx_.sub(f.coeff_encoded(i), g.coeff_encoded(i));
    }
    strip(out);
    Poly r(f.ctx_);
    r.c_ = std::move(out);
    return r;
}

Poly operator*(const Poly& f, const Poly& g) {
    require_same(f, g);
    if (f.is_zero() || g.is_zero()) return Poly(f.ctx_);
    std::vector<std::uint64_t> out(f.c_.size() + g.c_.size() - 1, 0);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i] == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) {
            out[i + j] = f.ctx_.add(out[i + j], f.ctx_.mul(f.c_[i], g.c_[j]));
        }
    }
    Poly r(f.ctx_);
    r.c_ = std::move(out);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (std::uint64_t v : c_) r.c_.push_back(ctx_.neg(v));
    return r;
}

Poly operator*(const FieldElem& c, const Poly& f) {
    if (!c.ctx().same_field(f.ctx())) {
        throw CtxMismatch("scalar and polynomial belong to different fields");
    }
    Poly r(f.ctx());
    if (c.is_zero()) return r;
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (std::uint64_t v : f.coeffs()) out.push_back(f.ctx().mul(c.to_int(), v));
    return Poly::from_coeffs(f.ctx(), std::move(out));
}

bool operator==(const Poly& f, const Poly& g) {
    require_same(f, g);
    return f.c_ == g.c_;
}

DivModResult divmod(const Poly& f, const Poly& g) {
    require_same(f, g);
    if (g.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    const FieldCtx& ctx = f.ctx();
    if (f.degree() < g.degree()) return {Poly(ctx), f};

    const std::size_t n = f.coeffs().size();
    const std::size_t m = g.coeffs().size();
    const std::uint64_t lc_inv = ctx.inv(g.coeffs().back());
    std::vector<std::uint64_t> rem = f.coeffs();
    std::vector<std::uint64_t> quot(n - m + 1, 0);
    for (std::size_t i = n; i-- > m - 1;) {
        if (rem[i] == 0) continue;
        const std::uint64_t c = ctx.mul(rem[i], lc_inv);
        const std::size_t shift = i - (m - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < m; ++j) {
            rem[shift + j] = ctx.sub(rem[shift + j], ctx.mul(c, g.coeffs()[j]));
        }
    }
    rem.resize(m - 1);
    return {Poly::from_coeffs(ctx, std::move(quot)), Poly::from_coeffs(ctx, std::move(rem))};
}

Poly gcd(const Poly& f, const Poly& g) {
    require_same(f, g);
    if (f.is_zero() && g.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.leading_coeff().inverse() * a;  // monic normalization
}

Poly pow(const Poly& f, std::uint64_t e) {
    Poly acc = Poly::one(f.ctx());
    Poly b = f;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    require_same(base, m);
    if (m.degree() < Degree(1)) throw ModulusConstant("powmod requires a modulus of degree >= 1");
    Poly acc = Poly::one(base.ctx());
    Poly b = divmod(base, m).remainder;
    while (e > 0) {
        if (e & 1) acc = divmod(acc * b, m).remainder;
        b = divmod(b * b, m).remainder;
        e >>= 1;
    }
    return acc;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < Degree(1)) {
        throw ConstantInput("irreducibility is only defined for degree >= 1");
    }
    const FieldCtx& ctx = f.ctx();
    const unsigned d = static_cast<unsigned>(f.degree().value());
    const Poly x = Poly::monomial(ctx, 1);
    const Poly x_red = divmod(x, f).remainder;
    // x^{q^j} mod f by j successive q-th powers
    auto frobenius = [&](unsigned steps) {
        Poly g = x_red;
        for (unsigned i = 0; i < steps; ++i) g = powmod(g, ctx.order(), f);
        return g;
    };
    if (frobenius(d) != x_red) return false;
    for (const auto& [r, e] : factor_u64(d)) {
        (void)e;
        const Poly g = frobenius(d / static_cast<unsigned>(r)) - x_red;
        Poly h = g.is_zero() ? (f.leading_coeff().inverse() * f) : gcd(f, g);
        if (h.degree() != Degree(0)) return false;
    }
    return true;
}

Factorization factor(const Poly& f) {
    if (f.is_zero()) throw ZeroInput("cannot factor the zero polynomial");
    const FieldCtx& ctx = f.ctx();
    Factorization out{f.leading_coeff(), {}};
    Poly rem = out.unit.inverse() * f;  // monic
    for (unsigned d = 1; rem.degree() >= Degree(static_cast<int>(2 * d)); ++d) {
        for (const Poly& p : irreducible_polys(ctx, d)) {
            unsigned e = 0;
            while (true) {
                auto qr = divmod(rem, p);
                if (!qr.remainder.is_zero()) break;
                rem = std::move(qr.quotient);
                ++e;
            }
            if (e > 0) out.factors.emplace_back(p, e);
            if (rem.degree() < Degree(static_cast<int>(2 * d))) break;
        }
    }
    if (rem.degree() >= Degree(1)) out.factors.emplace_back(rem, 1);
    return out;
}

std::uint64_t norm(const Poly& f) {
    if (f.is_zero()) throw ZeroInput("the zero polynomial has no norm");
    std::uint64_t n = 1;
    for (int i = 0; i < f.degree().value(); ++i) n = checked_mul_u64(n, f.ctx().order());
    return n;
}

std::uint64_t totient(const Poly& f) {
    if (f.is_zero()) throw ZeroInput("the totient of zero is undefined");
    if (f.degree() < Degree(1)) throw ConstantInput("the totient requires degree >= 1");
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factor(f).factors) {
        const std::uint64_t np = norm(p);
        std::uint64_t npe = 1;
        for (unsigned i = 1; i < e; ++i) npe = checked_mul_u64(npe, np);
        // phi(P^e) = |P|^e - |P|^{e-1} = |P|^{e-1} (|P| - 1)
        phi = checked_mul_u64(phi, checked_mul_u64(npe, np - 1));
    }
    return phi;
}

int canonical_compare(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = ca.size(); i-- > 0;) {
        if (ca[i] != cb[i]) return ca[i] < cb[i] ? -1 : 1;
    }
    return 0;
}

Poly MonicRange::iterator::operator*() const {
    std::vector<std::uint64_t> coeffs = lower_;
    coeffs.push_back(1);  // monic leading coefficient
    return Poly::from_coeffs(*ctx_, std::move(coeffs));
}

MonicRange::iterator& MonicRange::iterator::operator++() {
    // ascending canonical order = base-q odometer over the lower coefficients
    const std::uint64_t q = ctx_->order();
    std::size_t i = 0;
    for (; i < lower_.size(); ++i) {
        if (++lower_[i] < q) break;
        lower_[i] = 0;
    }
    if (i == lower_.size()) done_ = true;
    return *this;
}

MonicRange monic_polys(const FieldCtx& ctx, unsigned degree) { return MonicRange(ctx, degree); }

std::vector<Poly> irreducible_polys(const FieldCtx& ctx, unsigned degree) {
    if (degree < 1) throw std::invalid_argument("irreducible enumeration requires degree >= 1");
    std::vector<Poly> out;
    for (const Poly& f : monic_polys(ctx, degree)) {
        if (is_irreducible(f)) out.push_back(f);
    }
    return out;
}

namespace {

// A nonzero coefficient renders bare when it is a prime-subfield residue or a
// power of t with unit coefficient; anything else is parenthesized when it
// multiplies a power of the variable.
bool coeff_renders_bare(std::uint64_t enc, const FieldCtx& ctx) {
    if (enc < ctx.characteristic()) return true;
    std::uint64_t v = enc;
    while (v % ctx.characteristic() == 0) v /= ctx.characteristic();
    return v == 1;
}

std::string term_text(std::uint64_t enc, std::size_t deg, const FieldCtx& ctx,
                      std::string_view var) {
    const std::string elem = to_string(FieldElem::from_int(enc, ctx));
    if (deg == 0) return elem;
    std::string out;
    if (enc != 1) {
        if (ctx.ext_degree() == 1 || coeff_renders_bare(enc, ctx)) {
            out += elem;
        } else {
            out += '(' + elem + ')';
        }
        out += '*';
    }
    out += var;
    if (deg > 1) out += '^' + std::to_string(deg);
    return out;
}

}  // namespace

std::string to_string(const Poly& f, std::string_view var, TermOrder order) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    auto emit = [&](std::size_t i) {
        if (c[i] == 0) return;
        if (!out.empty()) out += '+';
        out += term_text(c[i], i, f.ctx(), var);
    };
    if (order == TermOrder::descending) {
        for (std::size_t i = c.size(); i-- > 0;) emit(i);
    } else {
        for (std::size_t i = 0; i < c.size(); ++i) emit(i);
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, i); }
};

constexpr std::uint64_t kMaxExponent = 1u << 20;

std::uint64_t parse_uint(Cursor& cur) {
    cur.skip_ws();
    if (cur.i >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
        cur.fail("expected an unsigned integer");
    }
    std::uint64_t v = 0;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
        if (v > (std::uint64_t{1} << 60)) cur.fail("integer literal too large");
        v = v * 10 + static_cast<std::uint64_t>(cur.s[cur.i] - '0');
        ++cur.i;
    }
    return v;
}

bool starts_with_at(const Cursor& cur, std::string_view word) {
    return cur.s.substr(cur.i, word.size()) == word;
}

// var ('^' uint)? -> exponent; no match leaves the cursor untouched
std::optional<std::uint64_t> try_parse_mono(Cursor& cur, std::string_view var) {
    cur.skip_ws();
    if (!starts_with_at(cur, var)) return std::nullopt;
    // the variable must not be a prefix of a longer identifier
    const std::size_t after = cur.i + var.size();
    if (after < cur.s.size() && std::isalnum(static_cast<unsigned char>(cur.s[after])) &&
        !std::isdigit(static_cast<unsigned char>(cur.s[after]))) {
        return std::nullopt;
    }
    cur.i = after;
    if (cur.eat('^')) {
        const std::uint64_t e = parse_uint(cur);
        if (e > kMaxExponent) cur.fail("exponent too large");
        return e;
    }
    return 1;
}

Poly parse_expr(Cursor& cur, const FieldCtx& ctx, std::string_view var);

// element of an extension field written as a polynomial in t of degree < k
FieldElem parse_ext_element(Cursor& cur, const FieldCtx& ctx) {
    const FieldCtx fp = ctx.prime_subfield();
    const Poly in_t = parse_expr(cur, fp, "t");
    if (in_t.degree() >= Degree(static_cast<int>(ctx.ext_degree()))) {
        throw CoefficientOutOfField("coefficient " + to_string(in_t, "t") +
                                    " has degree >= " + std::to_string(ctx.ext_degree()) +
                                    " and is not an element of " + ctx.describe());
    }
    std::uint64_t enc = 0;
    for (std::size_t j = in_t.coeffs().size(); j-- > 0;) {
        enc = enc * ctx.characteristic() + in_t.coeffs()[j];
    }
    return FieldElem::from_int(enc, ctx);
}

std::optional<FieldElem> try_parse_coeff(Cursor& cur, const FieldCtx& ctx, std::string_view var) {
    cur.skip_ws();
    const char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t at = cur.i;
        const std::uint64_t v = parse_uint(cur);
        if (ctx.ext_degree() == 1) {
            if (v >= ctx.characteristic()) {
                throw CoefficientOutOfField("coefficient " + std::to_string(v) +
                                            " is not a residue of " + ctx.describe() +
                                            " (at position " + std::to_string(at) + ")");
            }
            return FieldElem::from_int(v, ctx);
        }
        if (v >= ctx.characteristic()) {
            throw CoefficientOutOfField("coefficient " + std::to_string(v) +
                                        " is not a prime-subfield residue of " + ctx.describe() +
                                        " (at position " + std::to_string(at) + ")");
        }
        return FieldElem::from_int(v, ctx);
    }
    if (ctx.ext_degree() > 1 && var != "t") {
        if (c == '(') {
            cur.eat('(');
            FieldElem e = parse_ext_element(cur, ctx);
            if (!cur.eat(')')) cur.fail("expected ')'");
            return e;
        }
        if (auto te = try_parse_mono(cur, "t")) {
            if (*te >= ctx.ext_degree()) {
                throw CoefficientOutOfField("t^" + std::to_string(*te) +
                                            " is not an element of " + ctx.describe());
            }
            std::uint64_t enc = 1;
            for (std::uint64_t j = 0; j < *te; ++j) enc *= ctx.characteristic();
            return FieldElem::from_int(enc, ctx);
        }
    }
    return std::nullopt;
}

// term := coeff | coeff '*' mono | mono
Poly parse_term(Cursor& cur, const FieldCtx& ctx, std::string_view var) {
    std::optional<FieldElem> coeff = try_parse_coeff(cur, ctx, var);
    if (coeff) {
        cur.skip_ws();
        if (cur.eat('*')) {
            auto e = try_parse_mono(cur, var);
            if (!e) cur.fail(std::string("expected '") + std::string(var) + "' after '*'");
            return *coeff * Poly::monomial(ctx, static_cast<unsigned>(*e));
        }
        return Poly::constant(*coeff);
    }
    if (auto e = try_parse_mono(cur, var)) {
        return Poly::monomial(ctx, static_cast<unsigned>(*e));
    }
    cur.fail("expected a term");
}

Poly parse_expr(Cursor& cur, const FieldCtx& ctx, std::string_view var) {
    Poly acc = parse_term(cur, ctx, var);
    while (true) {
        cur.skip_ws();
        if (cur.eat('+')) {
            acc = acc + parse_term(cur, ctx, var);
        } else if (cur.eat('-')) {
            acc = acc - parse_term(cur, ctx, var);
        } else {
            return acc;
        }
    }
}

}  // namespace

Poly parse_poly(std::string_view text, const FieldCtx& ctx, std::string_view var) {
    Cursor cur{text};
    Poly f = parse_expr(cur, ctx, var);
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return f;
}

}  // namespace fqdigits
