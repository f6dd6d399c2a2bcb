#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqdigits/field.hpp"

namespace fqdigits {

/// Degree of a polynomial, with a distinguished minus-infinity value for the
/// zero polynomial so that deg r < deg g reads naturally in division loops.
class Degree {
  public:
    constexpr Degree(int v) noexcept : finite_(true), v_(v) {}
    static constexpr Degree neg_infinity() noexcept { return Degree(); }

    constexpr bool is_finite() const noexcept { return finite_; }
    /// finite value; throws std::logic_error on minus infinity
    int value() const;

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;  // -inf below all
        if (!a.finite_) return std::strong_ordering::equal;
        return a.v_ <=> b.v_;
    }

  private:
    constexpr Degree() noexcept : finite_(false), v_(0) {}
    bool finite_;
    int v_;
};

/// Dense univariate polynomial over a FieldCtx. Coefficients are stored in
/// canonical element encoding, index i = coefficient of x^i, with no trailing
/// zeros (the zero polynomial is the empty vector). Immutable value type; all
/// operations are pure and require matching contexts (CtxMismatch otherwise).
class Poly {
  public:
    explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}  // zero polynomial

    /// from encoded coefficients (index i = coefficient of x^i); trailing
    /// zeros are stripped, values must lie in [0, q)
    static Poly from_coeffs(const FieldCtx& ctx, std::vector<std::uint64_t> encoded);
    static Poly constant(const FieldElem& c);
    static Poly one(const FieldCtx& ctx) { return constant(FieldElem::one(ctx)); }
    /// c * x^d (default c = 1)
    static Poly monomial(const FieldCtx& ctx, unsigned d, std::uint64_t encoded_coeff = 1);

    const FieldCtx& ctx() const noexcept { return ctx_; }
    Degree degree() const noexcept {
        return c_.empty() ? Degree::neg_infinity() : Degree(static_cast<int>(c_.size()) - 1);
    }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    /// coefficient of x^i (zero beyond the degree)
    FieldElem coeff(std::size_t i) const;
    std::uint64_t coeff_encoded(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElem leading_coeff() const;  // throws ZeroInput on the zero polynomial
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    Poly operator-() const;
    /// scalar multiple
    friend Poly operator*(const FieldElem& c, const Poly& f);

    friend bool operator==(const Poly& f, const Poly& g);
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

  private:
    FieldCtx ctx_;
    std::vector<std::uint64_t> c_;
};

struct DivModResult {
    Poly quotient;
    Poly remainder;
};

/// f = q*g + r with deg r < deg g; g may be non-monic. Throws
/// DivisionByZeroPoly when g = 0.
DivModResult divmod(const Poly& f, const Poly& g);

/// monic gcd; gcd(f, 0) is the monic normalization of f. Throws BothZero.
Poly gcd(const Poly& f, const Poly& g);

/// f^e by square-and-multiply; f^0 = 1
Poly pow(const Poly& f, std::uint64_t e);

/// base^e mod m by square-and-multiply; deg m >= 1 (ModulusConstant), e = 0
/// gives 1.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Rabin irreducibility test: f (deg >= 1, ConstantInput otherwise) is
/// irreducible over F_q iff x^{q^d} = x mod f at d = deg f and
/// gcd(x^{q^{d/r}} - x, f) = 1 for every prime r | d.
bool is_irreducible(const Poly& f);

/// unit * product of factors[i].first ^ factors[i].second = the factored
/// input, factors monic irreducible, pairwise distinct, ascending canonical
/// order
struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, unsigned>> factors;
};

/// complete factorization by trial division over enumerated monic
/// irreducibles of ascending degree; ZeroInput on 0
Factorization factor(const Poly& f);

/// |f| = q^{deg f}; ZeroInput on 0, Overflow when q^{deg f} exceeds uint64
std::uint64_t norm(const Poly& f);

/// order of the unit group of F_q[x]/(f): multiplicative over the
/// factorization with phi(P^e) = |P|^e - |P|^{e-1}. Requires deg f >= 1
/// (ConstantInput; ZeroInput on 0).
std::uint64_t totient(const Poly& f);

/// total order used for factor sorting and enumeration: by degree, then by
/// the integer formed from coefficient encodings, most significant first
int canonical_compare(const Poly& a, const Poly& b);

/// Lazily enumerates the q^d monic polynomials of degree d in ascending
/// canonical order.
class MonicRange {
  public:
    MonicRange(FieldCtx ctx, unsigned degree) : ctx_(std::move(ctx)), degree_(degree) {}

    class iterator {
      public:
        using value_type = Poly;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        Poly operator*() const;
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.lower_ == b.lower_);
        }
        friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

      private:
        friend class MonicRange;
        iterator(const FieldCtx* ctx, unsigned degree, bool done)
            : ctx_(ctx), degree_(degree), done_(done), lower_(done ? 0 : degree, 0) {}
        const FieldCtx* ctx_;
        unsigned degree_;
        bool done_;
        std::vector<std::uint64_t> lower_;  // odometer over the non-leading coefficients
    };

    iterator begin() const { return iterator(&ctx_, degree_, false); }
    iterator end() const { return iterator(&ctx_, degree_, true); }

  private:
    FieldCtx ctx_;
    unsigned degree_;
};

MonicRange monic_polys(const FieldCtx& ctx, unsigned degree);

/// the monic irreducibles of degree d (d >= 1) in ascending canonical order
std::vector<Poly> irreducible_polys(const FieldCtx& ctx, unsigned degree);

enum class TermOrder { descending, ascending };

/// Canonical text form. Descending degree is the canonical polynomial form
/// ("x^4+x+1"); ascending is used where digit strings follow the positional
/// reading ("1+x"). Coefficients over extension fields render in the
/// generator t, parenthesized when attached to a power of the variable and
/// not a plain power of t.
std::string to_string(const Poly& f, std::string_view var = "x",
                      TermOrder order = TermOrder::descending);

/// Parses the grammar
///   expr  := term (('+'|'-') term)*
///   term  := coeff | coeff '*' mono | mono
///   mono  := var ('^' uint)?
///   coeff := uint | 't'-mono | '(' expr-in-t ')'   (the last two for k > 1)
/// where '-' maps to the additive inverse and whitespace is ignored.
/// Products of polynomials in the variable ("x*(x-1)") are not in the
/// grammar. Throws SyntaxError with position, CoefficientOutOfField for
/// residues or t-degrees outside the field.
Poly parse_poly(std::string_view text, const FieldCtx& ctx, std::string_view var = "x");

}  // namespace fqdigits
