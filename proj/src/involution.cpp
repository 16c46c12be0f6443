#include "leviflat/involution.hpp"

#include <vector>

namespace leviflat {

InvolutionContext InvolutionContext::make(SpacePtr source, const std::string& skew,
                                          const std::string& partner,
                                          const std::string& invariant_name) {
    InvolutionContext ctx;
    ctx.source_ = std::move(source);
    ctx.skew_ = skew;
    ctx.partner_ = partner;
    ctx.inv_name_ = invariant_name;
    int si = ctx.source_->index(skew);
    ctx.source_->index(partner);
    if (skew == partner) throw SeriesError("skew and partner must differ");
    if (ctx.source_->find(invariant_name))
        throw SeriesError("invariant name collides with a source variable");

    std::vector<std::string> names;
    for (int i = 0; i < ctx.source_->dim(); ++i)
        if (i != si) names.push_back(ctx.source_->name(i));
    names.push_back(invariant_name);
    auto inv = VariableSpace::make(names);
    for (int i = 0; i < ctx.source_->dim(); ++i) {
        if (i == si) continue;
        if (ctx.source_->weight(i) != 1)
            inv = inv->with_weight(ctx.source_->name(i), ctx.source_->weight(i));
    }
    inv = inv->with_weight(invariant_name, 2);
    ctx.invariant_ = inv;
    return ctx;
}

TruncatedSeries InvolutionContext::eta_source() const {
    auto skew = TruncatedSeries::variable(source_, skew_);
    auto partner = TruncatedSeries::variable(source_, partner_);
    return skew + partner.scaled(GaussianRational(mpq_class(1, 2)));
}

TruncatedSeries InvolutionContext::w_source() const {
    auto skew = TruncatedSeries::variable(source_, skew_);
    auto partner = TruncatedSeries::variable(source_, partner_);
    return skew * partner + skew * skew;
}

TruncatedSeries InvolutionContext::apply(const TruncatedSeries& u) const {
    if (*u.space() != *source_) throw SeriesError("series is not over the involution's space");
    auto image = -TruncatedSeries::variable(source_, skew_) -
                 TruncatedSeries::variable(source_, partner_);
    return u.substitute({{skew_, image}});
}

SigmaDecomposition InvolutionContext::decompose(const TruncatedSeries& u) const {
    if (*u.space() != *source_) throw SeriesError("series is not over the involution's space");
    const int si = source_->index(skew_);
    const int n = source_->dim();

    // skew^j = sum_m binom(j,m) eta^m (-partner/2)^(j-m), eta^2 = w + partner^2/4.
    auto partner = TruncatedSeries::variable(invariant_, partner_);
    auto w = TruncatedSeries::variable(invariant_, inv_name_);
    auto eta_sq = w + (partner * partner).scaled(GaussianRational(mpq_class(1, 4)));
    auto neg_half_partner = partner.scaled(GaussianRational(mpq_class(-1, 2)));

    std::vector<TruncatedSeries> eta_sq_pow{TruncatedSeries::constant(invariant_, 1)};
    std::vector<TruncatedSeries> nhp_pow{TruncatedSeries::constant(invariant_, 1)};
    auto pow_of = [](std::vector<TruncatedSeries>& tab, const TruncatedSeries& base,
                     int e) -> const TruncatedSeries& {
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * base);
        return tab[e];
    };

    TruncatedSeries plus = TruncatedSeries::zero(invariant_);
    TruncatedSeries minus = TruncatedSeries::zero(invariant_);
    for (const auto& [m, c] : u.terms()) {
        int j = m.exp[si];
        std::vector<int> rest(invariant_->dim(), 0);
        for (int i = 0, k = 0; i < n; ++i) {
            if (i == si) continue;
            rest[k++] = m.exp[i];
        }
        auto base = TruncatedSeries::monomial(invariant_, rest, c);
        mpz_class binom = 1;
        for (int mm = 0; mm <= j; ++mm) {
            if (mm > 0) binom = binom * (j - mm + 1) / mm;
            auto piece = base.scaled(GaussianRational(mpq_class(binom))) *
                         pow_of(eta_sq_pow, eta_sq, mm / 2) *
                         pow_of(nhp_pow, neg_half_partner, j - mm);
            if (mm % 2 == 0) {
                plus += piece;
            } else {
                minus += piece;
            }
        }
    }
    // The split preserves weight, so reliability transfers as a weight bound.
    if (!u.is_exact()) {
        plus = plus.weighted_parts_up_to(u.trunc()).truncated(u.trunc());
        minus = minus.weighted_parts_up_to(u.trunc()).truncated(u.trunc());
    }
    return SigmaDecomposition{std::move(plus), std::move(minus)};
}

TruncatedSeries InvolutionContext::recompose(const SigmaDecomposition& d) const {
    return expand_invariant(d.plus) + expand_invariant(d.minus) * eta_source();
}

TruncatedSeries InvolutionContext::expand_invariant(const TruncatedSeries& v) const {
    if (*v.space() != *invariant_) throw SeriesError("series is not in invariant coordinates");
    return v.substitute({{inv_name_, w_source()}});
}

bool InvolutionContext::is_invariant(const TruncatedSeries& u) const {
    return apply(u) == u;
}

std::pair<GaussianRational, TruncatedSeries> lambda_coefficient(const InvolutionContext& ctx,
                                                                int N) {
    if (N < 1) throw SeriesError("N must be positive");
    auto skew = TruncatedSeries::variable(ctx.source_space(), ctx.skew_name());
    auto u = skew.pow(N) + ctx.apply(skew).pow(N);
    auto d = ctx.decompose(u);
    if (!d.minus.is_zero()) throw SeriesError("expected an invariant polynomial");
    std::vector<int> e(ctx.invariant_space()->dim(), 0);
    e[ctx.invariant_space()->index(ctx.partner_name())] = N;
    GaussianRational lam = d.plus.coeff(e);
    GaussianRational expected = (N % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
    if (lam != expected) throw SeriesError("lambda coefficient deviates from (-1)^N");
    auto remainder = d.plus - TruncatedSeries::monomial(ctx.invariant_space(), e, lam);
    return {lam, remainder};
}

std::pair<GaussianRational, TruncatedSeries> lambda_prime_coefficient(const InvolutionContext& ctx,
                                                                      int N) {
    if (N < 2) throw SeriesError("N must be at least 2");
    auto skew = TruncatedSeries::variable(ctx.source_space(), ctx.skew_name());
    auto image = ctx.apply(skew);
    auto u = TruncatedSeries::zero(ctx.source_space());
    for (int i = 0; i <= N - 1; ++i) u += skew.pow(i) * image.pow(N - 1 - i);
    auto d = ctx.decompose(u);
    if (!d.minus.is_zero()) throw SeriesError("expected an invariant polynomial");
    std::vector<int> e(ctx.invariant_space()->dim(), 0);
    e[ctx.invariant_space()->index(ctx.partner_name())] = N - 1;
    GaussianRational lam = d.plus.coeff(e);
    GaussianRational expected = ((N - 1) % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
    if (lam != expected) throw SeriesError("lambda' coefficient deviates from (-1)^(N-1)");
    auto remainder = d.plus - TruncatedSeries::monomial(ctx.invariant_space(), e, lam);
    return {lam, remainder};
}

}  // namespace leviflat
