#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "leviflat/rational.hpp"

namespace leviflat {

/// Shared list of adjoined square roots.  Each entry d gets a formal symbol
/// r with r^2 = d; conjugation maps r to the symbol of conj(d) (adjoined
/// together), with a sign for real negative d whose root is imaginary.
class ExtensionContext {
public:
    /// Index of a symbol for sqrt(d); adjoins d (and conj(d) if complex) on
    /// first use.  d must not be an exact square in Q(i) (callers test
    /// exact_sqrt first).
    int adjoin(const GaussianRational& d);

    int count() const { return static_cast<int>(roots_.size()); }
    const GaussianRational& root_square(int t) const { return roots_[t]; }
    int conj_partner(int t) const { return conj_[t]; }
    bool conj_negates(int t) const { return negate_[t]; }

private:
    std::vector<GaussianRational> roots_;
    std::vector<int> conj_;
    std::vector<bool> negate_;
};

using ExtCtxPtr = std::shared_ptr<ExtensionContext>;

/// Element of Q(i) with finitely many adjoined square roots: a linear
/// combination of square-free products of the root symbols (bitmask basis).
/// Equality in this ring is sound for witness checking: formally equal
/// expressions are equal under every evaluation of the symbols.
class ExtScalar {
public:
    ExtScalar() = default;
    explicit ExtScalar(ExtCtxPtr ctx) : ctx_(std::move(ctx)) {}
    ExtScalar(long v) { if (v) terms_[0] = GaussianRational(v); }  // NOLINT
    ExtScalar(ExtCtxPtr ctx, const GaussianRational& c) : ctx_(std::move(ctx)) {
        if (!c.is_zero()) terms_[0] = c;
    }
    static ExtScalar root(const ExtCtxPtr& ctx, int index) {
        ExtScalar e(ctx);
        e.terms_[uint32_t(1) << index] = GaussianRational(1);
        return e;
    }
    /// A square root of d: exact in Q(i) when possible, otherwise a fresh
    /// (or reused) symbol.
    static ExtScalar sqrt(const ExtCtxPtr& ctx, const GaussianRational& d);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    GaussianRational rational_part() const;
    /// True when any adjoined symbol occurs.
    bool uses_roots() const;

    ExtScalar conj() const;
    ExtScalar operator-() const;
    ExtScalar& operator+=(const ExtScalar& o);
    ExtScalar& operator-=(const ExtScalar& o);
    friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
    friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
    ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }
    ExtScalar scaled(const GaussianRational& c) const;

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    std::string to_string() const;
    const ExtCtxPtr& ctx() const { return ctx_; }

private:
    void merge_ctx(const ExtScalar& o);
    ExtCtxPtr ctx_;
    std::map<uint32_t, GaussianRational> terms_;
};

}  // namespace leviflat
