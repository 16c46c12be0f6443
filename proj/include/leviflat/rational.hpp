#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace leviflat {

/// Exact element of Q(i).  Both components are GMP rationals, which GMP
/// keeps in lowest terms with positive denominator, so equality is
/// structural.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = mpq_class(0))
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(0, 1); }
    GaussianRational(long re, long im) : re_(re), im_(im) {}

    /// Parses "p/q" or "p" (decimal points are rejected by GMP).
    static mpq_class parse_rational(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty rational");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    static GaussianRational parse(const std::string& re, const std::string& im) {
        return GaussianRational(parse_rational(re), parse_rational(im));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// |x|^2 as an exact rational.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
        mpq_class n = o.norm2();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Exact square root in Q(i) if one exists.
    /// Solves (x+iy)^2 = re+im*i over the rationals.
    bool exact_sqrt(GaussianRational* out) const;

    std::string re_str() const { return re_.get_str(); }
    std::string im_str() const { return im_.get_str(); }

    /// Human-readable form, e.g. "1/2+3i", "-i", "0".
    std::string to_string() const;

private:
    mpq_class re_;
    mpq_class im_;
};

/// Exact rational square root: returns true and sets *out when q is the
/// square of a rational.
bool rational_sqrt(const mpq_class& q, mpq_class* out);

}  // namespace leviflat
