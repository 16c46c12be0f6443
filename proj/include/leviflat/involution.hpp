#pragma once

#include <string>
#include <utility>

#include "leviflat/series.hpp"

namespace leviflat {

/// The pair (u+, u-) of a skew-invariant splitting u = u+ + eta * u-, both
/// components written in invariant coordinates.
struct SigmaDecomposition {
    TruncatedSeries plus;
    TruncatedSeries minus;
};

/// A linear involution  skew -> -skew - partner  acting on a series space,
/// together with its invariant coordinates.  The invariant ring is generated
/// by the untouched variables, the partner, and w = skew*partner + skew^2;
/// the skew element is eta = skew + partner/2 with eta^2 = w + partner^2/4.
///
/// The same machinery serves the automorphism computation (skew = conj z1,
/// partner = z2) and the parametrized normal form (skew = conj z, partner =
/// the leaf parameter).
class InvolutionContext {
public:
    /// `invariant_name` is the fresh variable standing for skew*partner +
    /// skew^2 in invariant coordinates; it receives weight 2.
    static InvolutionContext make(SpacePtr source, const std::string& skew,
                                  const std::string& partner,
                                  const std::string& invariant_name = "w");

    const SpacePtr& source_space() const { return source_; }
    const SpacePtr& invariant_space() const { return invariant_; }
    const std::string& skew_name() const { return skew_; }
    const std::string& partner_name() const { return partner_; }
    const std::string& invariant_name() const { return inv_name_; }

    /// skew + partner/2, in source coordinates.
    TruncatedSeries eta_source() const;
    /// skew*partner + skew^2, in source coordinates.
    TruncatedSeries w_source() const;

    /// The substitution skew -> -skew - partner.  Involutive.
    TruncatedSeries apply(const TruncatedSeries& u) const;

    /// Splits u = plus + eta * minus via the closed-form binomial expansion
    /// of skew = eta - partner/2 with eta^2 reduced to w + partner^2/4.
    /// Components carry the source truncation bound as a weight bound (all
    /// invariant-space terms of weight <= u.trunc are exact).
    SigmaDecomposition decompose(const TruncatedSeries& u) const;

    TruncatedSeries recompose(const SigmaDecomposition& d) const;

    /// Rewrites an invariant-coordinates series back into source
    /// coordinates by expanding the invariant variable.
    TruncatedSeries expand_invariant(const TruncatedSeries& v) const;

    /// True when u is fixed by the involution.
    bool is_invariant(const TruncatedSeries& u) const;

private:
    SpacePtr source_;
    SpacePtr invariant_;
    std::string skew_;
    std::string partner_;
    std::string inv_name_;
};

/// Expansion of skew^N + (-skew-partner)^N in invariant coordinates: the
/// pure partner^N coefficient (always (-1)^N, asserted) plus the remainder.
std::pair<GaussianRational, TruncatedSeries> lambda_coefficient(const InvolutionContext& ctx,
                                                                int N);

/// Expansion of sum_i skew^i (-skew-partner)^(N-1-i): the partner^(N-1)
/// coefficient (always (-1)^(N-1), asserted) plus the remainder.
std::pair<GaussianRational, TruncatedSeries> lambda_prime_coefficient(const InvolutionContext& ctx,
                                                                      int N);

}  // namespace leviflat
