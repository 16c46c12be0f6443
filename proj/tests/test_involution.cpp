#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leviflat/involution.hpp"

using namespace leviflat;

namespace {

InvolutionContext sigma_ctx() {
    auto sp = VariableSpace::make({"z", "zb", "xi"});
    sp = sp->with_pair("z", "zb");
    return InvolutionContext::make(sp, "zb", "xi");
}

TruncatedSeries random_series(const SpacePtr& sp, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expd(0, 3);
    TruncatedSeries s = TruncatedSeries::zero(sp);
    for (int t = 0; t < 10; ++t) {
        std::vector<int> e(sp->dim(), 0);
        int total = 0;
        for (int i = 0; i < sp->dim(); ++i) {
            e[i] = expd(rng);
            total += e[i];
        }
        if (total > deg) continue;
        s += TruncatedSeries::monomial(sp, e, GaussianRational(coeff(rng), coeff(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("involution fixes the quadric and negates eta") {
    auto ctx = sigma_ctx();
    auto w = ctx.w_source();
    CHECK(ctx.apply(w) == w);
    auto eta = ctx.eta_source();
    CHECK(ctx.apply(eta) == -eta);
    auto zb = TruncatedSeries::variable(ctx.source_space(), "zb");
    auto xi = TruncatedSeries::variable(ctx.source_space(), "xi");
    CHECK(ctx.apply(zb) == -zb - xi);
}

TEST_CASE("involution is an involution on random series") {
    auto ctx = sigma_ctx();
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        auto u = random_series(ctx.source_space(), 5, rng);
        CHECK(ctx.apply(ctx.apply(u)) == u);
    }
}

TEST_CASE("decompose basic values") {
    auto ctx = sigma_ctx();
    auto sp = ctx.source_space();
    auto isp = ctx.invariant_space();
    auto zb = TruncatedSeries::variable(sp, "zb");

    // zb = eta - xi/2: plus = -xi/2, minus = 1
    auto d = ctx.decompose(zb);
    CHECK(d.plus == TruncatedSeries::variable(isp, "xi").scaled(GaussianRational(mpq_class(-1, 2))));
    CHECK(d.minus == TruncatedSeries::constant(isp, 1));

    // zb^2: plus = w + xi^2/2, minus = -xi
    auto d2 = ctx.decompose(zb * zb);
    auto xi_i = TruncatedSeries::variable(isp, "xi");
    auto w_i = TruncatedSeries::variable(isp, "w");
    CHECK(d2.plus == w_i + (xi_i * xi_i).scaled(GaussianRational(mpq_class(1, 2))));
    CHECK(d2.minus == -xi_i);

    // invariant input: plus = itself, minus = 0
    auto d3 = ctx.decompose(TruncatedSeries::variable(sp, "xi"));
    CHECK(d3.plus == xi_i);
    CHECK(d3.minus.is_zero());
}

TEST_CASE("recompose round trips") {
    auto ctx = sigma_ctx();
    std::mt19937_64 rng(29);
    for (int it = 0; it < 50; ++it) {
        auto u = random_series(ctx.source_space(), 6, rng);
        auto d = ctx.decompose(u);
        CHECK(ctx.recompose(d) == u);
        // uniqueness: decompose(recompose(d)) == d
        auto d2 = ctx.decompose(ctx.recompose(d));
        CHECK(d2.plus == d.plus);
        CHECK(d2.minus == d.minus);
    }
}

TEST_CASE("fixed series have zero skew part, both directions") {
    auto ctx = sigma_ctx();
    std::mt19937_64 rng(37);
    for (int it = 0; it < 30; ++it) {
        auto u = random_series(ctx.source_space(), 5, rng);
        auto d = ctx.decompose(u);
        bool fixed = ctx.apply(u) == u;
        CHECK(fixed == d.minus.is_zero());
        // symmetrized series are always fixed
        auto sym = u + ctx.apply(u);
        CHECK(ctx.decompose(sym).minus.is_zero());
        // eta * invariant is purely skew
        auto skew = ctx.eta_source() * sym;
        CHECK(ctx.decompose(skew).plus.is_zero());
    }
}

TEST_CASE("skew part at w=0 matches the difference-quotient form") {
    // For u(z, zb): T-(u)(z, xi, 0) = (u(z,-xi) - u(z,0)) / (-xi).
    auto ctx = sigma_ctx();
    auto sp = ctx.source_space();
    auto isp = ctx.invariant_space();
    std::mt19937_64 rng(43);
    for (int it = 0; it < 100; ++it) {
        std::uniform_int_distribution<int> coeff(-3, 3);
        std::uniform_int_distribution<int> expd(0, 4);
        TruncatedSeries u = TruncatedSeries::zero(sp);
        for (int t = 0; t < 8; ++t) {
            int i = expd(rng), j = expd(rng);
            u += TruncatedSeries::monomial(sp, {i, j, 0}, GaussianRational(coeff(rng), coeff(rng)));
        }
        auto d = ctx.decompose(u);
        auto minus_w0 = d.minus.substitute(
            {{"w", TruncatedSeries::zero(isp)}});
        auto neg_xi = -TruncatedSeries::variable(sp, "xi");
        auto zero = TruncatedSeries::zero(sp);
        auto diff = u.substitute({{"zb", neg_xi}}) - u.substitute({{"zb", zero}});
        TruncatedSeries quotient = diff.is_zero()
                                       ? TruncatedSeries::zero(sp)
                                       : diff.divide_exact(neg_xi);
        // Compare in source coordinates (minus_w0 has no w left).
        CHECK(ctx.expand_invariant(minus_w0) == quotient);
    }
}

TEST_CASE("lambda coefficients") {
    auto ctx = sigma_ctx();
    auto isp = ctx.invariant_space();
    // N=1: zb + (-zb-xi) = -xi, remainder 0
    auto [l1, r1] = lambda_coefficient(ctx, 1);
    CHECK(l1 == GaussianRational(-1));
    CHECK(r1.is_zero());
    // N=2: zb^2 + (zb+xi)^2 = xi^2 + 2w
    auto [l2, r2] = lambda_coefficient(ctx, 2);
    CHECK(l2 == GaussianRational(1));
    CHECK(r2 == TruncatedSeries::variable(isp, "w").scaled(GaussianRational(2)));
    auto [l3, r3] = lambda_coefficient(ctx, 3);
    CHECK(l3 == GaussianRational(-1));
    for (int N = 1; N <= 12; ++N) {
        auto [l, r] = lambda_coefficient(ctx, N);
        CHECK(l == GaussianRational(N % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("lambda prime coefficients") {
    auto ctx = sigma_ctx();
    // N=2: zb + (-zb-xi) = -xi so lambda'_1 = -1
    auto [l1, r1] = lambda_prime_coefficient(ctx, 2);
    CHECK(l1 == GaussianRational(-1));
    // N=3: zb^2 + zb(-zb-xi) + (-zb-xi)^2 -> xi^2 coefficient 1
    auto [l2, r2] = lambda_prime_coefficient(ctx, 3);
    CHECK(l2 == GaussianRational(1));
    for (int N = 2; N <= 12; ++N) {
        auto [l, r] = lambda_prime_coefficient(ctx, N);
        CHECK(l == GaussianRational((N - 1) % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("the same machinery serves the automorphism variables") {
    auto sp = VariableSpace::make({"z1b", "z2"});
    auto ctx = InvolutionContext::make(sp, "z1b", "z2");
    // z1b z2 + z1b^2 is the invariant w
    auto z1b = TruncatedSeries::variable(sp, "z1b");
    auto z2 = TruncatedSeries::variable(sp, "z2");
    auto q = z1b * z2 + z1b * z1b;
    CHECK(ctx.apply(q) == q);
    auto d = ctx.decompose(q);
    CHECK(d.minus.is_zero());
    CHECK(d.plus == TruncatedSeries::variable(ctx.invariant_space(), "w"));
}
