#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fqdigits/errors.hpp"

namespace fqdigits {

/// Description of a finite field F_q, q = p^k: residues mod p when k = 1, the
/// quotient ring F_p[t]/(modulus) for a user-supplied monic irreducible
/// modulus when k > 1.
///
/// Elements are carried in a canonical integer encoding: the coefficient
/// vector (c_0, ..., c_{k-1}) over F_p corresponds to the integer
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1} in [0, q). That encoding is the
/// external representation (serialization, enumeration order) and the
/// internal one; the arithmetic methods below operate on encoded values.
///
/// A context is immutable after construction and cheap to copy (shared
/// internals); all operations are pure.
class FieldCtx {
  public:
    /// Validates and builds a context. p must be prime, k >= 1, and the
    /// modulus (residue vector c_0..c_k, monic, degree exactly k, irreducible
    /// over F_p) is supplied iff k > 1. q = p^k is capped at 2^32 so every
    /// intermediate product fits in uint64.
    static FieldCtx make(std::uint64_t p, unsigned k = 1,
                         const std::optional<std::vector<std::uint64_t>>& modulus = std::nullopt);

    std::uint64_t characteristic() const noexcept;
    unsigned ext_degree() const noexcept;
    std::uint64_t order() const noexcept;  // q = p^k
    /// modulus residue vector (size k+1, monic); empty for k = 1
    const std::vector<std::uint64_t>& modulus() const noexcept;
    /// the prime field F_p this field extends (itself when k = 1)
    FieldCtx prime_subfield() const;

    bool same_field(const FieldCtx& other) const noexcept;

    // arithmetic on canonically encoded elements, inputs/outputs in [0, q)
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws ZeroInverse on 0
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    std::string describe() const;  // "F_2", "F_4 = F_2[t]/(t^2+t+1)"

  private:
    struct Impl;
    explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// One element of a FieldCtx. Value type; arithmetic between elements of
/// different contexts throws CtxMismatch rather than coercing.
class FieldElem {
  public:
    /// canonical decoding of n in [0, q); throws OutOfRange otherwise
    static FieldElem from_int(std::uint64_t n, const FieldCtx& ctx);
    static FieldElem zero(const FieldCtx& ctx) { return from_int(0, ctx); }
    static FieldElem one(const FieldCtx& ctx) { return from_int(1, ctx); }

    std::uint64_t to_int() const noexcept { return rep_; }
    const FieldCtx& ctx() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return rep_ == 0; }
    bool is_one() const noexcept { return rep_ == 1; }

    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const;

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  private:
    FieldElem(FieldCtx ctx, std::uint64_t rep) : ctx_(std::move(ctx)), rep_(rep) {}
    FieldCtx ctx_;
    std::uint64_t rep_;
};

/// All q elements in ascending canonical-encoding order (stable across runs).
/// Materializes a vector; intended for the small fields this tool sweeps.
std::vector<FieldElem> all_elements(const FieldCtx& ctx);

/// Text form: decimal residue for k = 1, polynomial in the generator t for
/// k > 1 (descending degree, e.g. "t+1").
std::string to_string(const FieldElem& a);

}  // namespace fqdigits
