#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leviflat/rational.hpp"

namespace leviflat {

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered variable set with an optional conjugation pairing and a positive
/// integer weight per variable.  Spaces are immutable and shared; equality
/// is by value.
class VariableSpace {
public:
    static std::shared_ptr<const VariableSpace> make(std::vector<std::string> names);

    /// Marks names[i] and names[j] as formal conjugates of each other.
    std::shared_ptr<const VariableSpace> with_pair(const std::string& a, const std::string& b) const;
    /// Declares a variable fixed under conjugation.
    std::shared_ptr<const VariableSpace> with_real(const std::string& name) const;
    std::shared_ptr<const VariableSpace> with_weight(const std::string& name, int w) const;

    int dim() const { return static_cast<int>(names_.size()); }
    int index(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int conjugate_of(int i) const { return conj_[i]; }  // -1 if unpaired
    bool is_real(int i) const { return real_[i]; }
    int weight(int i) const { return weight_[i]; }
    const std::vector<int>& weights() const { return weight_; }

    friend bool operator==(const VariableSpace& a, const VariableSpace& b) {
        return a.names_ == b.names_ && a.conj_ == b.conj_ && a.real_ == b.real_ &&
               a.weight_ == b.weight_;
    }
    friend bool operator!=(const VariableSpace& a, const VariableSpace& b) { return !(a == b); }

private:
    VariableSpace() = default;
    std::vector<std::string> names_;
    std::vector<int> conj_;
    std::vector<bool> real_;
    std::vector<int> weight_;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

/// Exponent vector over a fixed space.
struct Monomial {
    std::vector<int> exp;

    int degree() const {
        int d = 0;
        for (int e : exp) d += e;
        return d;
    }
    int weighted_degree(const VariableSpace& sp) const {
        int d = 0;
        for (size_t i = 0; i < exp.size(); ++i) d += exp[i] * sp.weight(static_cast<int>(i));
        return d;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

/// Graded-lexicographic order: lower total degree first; within a degree,
/// larger exponent on earlier variables first.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp > b.exp;
    }
};

/// Sparse multivariate polynomial over Q(i) with an explicit reliability
/// bound: coefficients of total degree <= trunc are exact, higher terms are
/// absent by contract.  trunc == kExactTrunc means the value is entire (a
/// genuine polynomial, all absent terms are zero).
class TruncatedSeries {
public:
    static constexpr int kExactTrunc = std::numeric_limits<int>::max();

    TruncatedSeries() = default;
    static TruncatedSeries zero(SpacePtr sp, int trunc = kExactTrunc);
    static TruncatedSeries constant(SpacePtr sp, GaussianRational c, int trunc = kExactTrunc);
    static TruncatedSeries variable(SpacePtr sp, const std::string& name, int trunc = kExactTrunc);
    static TruncatedSeries monomial(SpacePtr sp, const std::vector<int>& exp, GaussianRational c,
                                    int trunc = kExactTrunc);

    const SpacePtr& space() const { return space_; }
    int trunc() const { return trunc_; }
    bool is_exact() const { return trunc_ == kExactTrunc; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }

    const std::map<Monomial, GaussianRational, GradedLexLess>& terms() const { return coeffs_; }

    GaussianRational coeff(const std::vector<int>& exp) const;
    GaussianRational constant_term() const;

    /// Minimum total degree of a stored term; kExactTrunc for the zero value.
    int valuation() const;
    /// Maximum total degree of a stored term; -1 for the zero value.
    int max_degree() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    TruncatedSeries scaled(const GaussianRational& c) const;
    TruncatedSeries pow(int e) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return *a.space_ == *b.space_ && a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
    }

    /// Coefficientwise equality through total degree d.
    bool equals_mod(const TruncatedSeries& o, int d) const;

    /// Formal composition.  Every assignment value must live in a single
    /// target space; variables without an assignment must exist there by
    /// name and map to themselves.  Assignments with a nonzero constant
    /// term are accepted only on entire series (otherwise no truncation
    /// bound survives recentering).
    TruncatedSeries substitute(const std::map<std::string, TruncatedSeries>& assignments) const;

    /// Swaps paired exponents and conjugates the coefficients.  Every
    /// occurring variable must be paired or declared real.
    TruncatedSeries conjugate() const;

    TruncatedSeries homogeneous_part(int d) const;
    TruncatedSeries parts_up_to(int d) const;  // sum of homogeneous parts 0..d
    /// Graded component for the space's weight assignment.
    TruncatedSeries weighted_part(int d) const;
    TruncatedSeries weighted_parts_up_to(int d) const;
    int weighted_valuation() const;  // kExactTrunc for zero

    TruncatedSeries differentiate(const std::string& var) const;

    /// Compositional inverse in one distinguished variable, the remaining
    /// variables acting as parameters: returns g with u(var -> g) = var
    /// mod trunc.  Requires zero constant term and an invertible linear
    /// coefficient of var.
    TruncatedSeries invert_in(const std::string& var) const;

    /// Square root of a series with constant term 1, normalized to constant
    /// term 1.
    TruncatedSeries sqrt_unit() const;

    /// Reciprocal of a series with nonzero constant term.
    TruncatedSeries reciprocal_unit() const;

    /// Exact division: returns q with q * f == *this (mod trunc); throws if
    /// no such q exists.
    TruncatedSeries divide_exact(const TruncatedSeries& f) const;

    /// Returns a copy with a lower (or equal) truncation bound, dropping
    /// the now-unreliable terms.
    TruncatedSeries truncated(int t) const;

    /// Evaluates at a point given per-variable (all variables must be
    /// assigned); requires an entire series.
    GaussianRational eval(const std::map<std::string, GaussianRational>& point) const;

    std::string to_string() const;

private:
    void insert(Monomial m, GaussianRational c);
    void check_same_space(const TruncatedSeries& o) const;

    SpacePtr space_;
    std::map<Monomial, GaussianRational, GradedLexLess> coeffs_;
    int trunc_ = kExactTrunc;
};

int trunc_min(int a, int b);

}  // namespace leviflat
