#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leviflat/quadric.hpp"

using namespace leviflat;

namespace {

QMatrix mat(int n, std::initializer_list<GaussianRational> vals) {
    QMatrix m(n, n);
    auto it = vals.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = *it++;
    return m;
}

GaussianRational grc(long re, long im = 0) { return GaussianRational(re, im); }

QMatrix random_invertible(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    for (;;) {
        QMatrix T(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) T(i, j) = GaussianRational(d(rng), d(rng));
        if (!determinant(T).is_zero()) return T;
    }
}

GaussianRational random_nonzero_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    for (;;) {
        GaussianRational l(d(rng), d(rng));
        if (!l.is_zero()) return l;
    }
}

}  // namespace

TEST_CASE("transform_pair identity and diagonal scaling") {
    auto p = catalog_pair(QuadricType::C1(), 2);
    auto id = QMatrix::identity(2);
    CHECK(transform_pair(p, id, grc(1)) == p);

    // T = c I: A -> lambda |c|^2 A, B -> lambda conj(c)^2 B
    GaussianRational c(2, 1), lambda(3);
    QMatrix T = id.scaled(c);
    auto q = transform_pair(p, T, lambda);
    CHECK(q.A(0, 1) == lambda * c.conj() * c);
    CHECK(q.B(0, 0) == lambda * c.conj() * c.conj());
}

TEST_CASE("transform_pair group law") {
    std::mt19937_64 rng(5);
    auto p = catalog_pair(QuadricType::C1(), 3);
    for (int it = 0; it < 10; ++it) {
        auto T1 = random_invertible(3, rng);
        auto T2 = random_invertible(3, rng);
        auto l1 = random_nonzero_scalar(rng);
        auto l2 = random_nonzero_scalar(rng);
        auto lhs = transform_pair(transform_pair(p, T1, l1), T2, l2);
        auto rhs = transform_pair(p, T1 * T2, l1 * l2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("levi flat test on catalog and counterexamples") {
    // C.1 pair is Levi-flat
    CHECK(levi_flat_quadric_test(catalog_pair(QuadricType::C1(), 2)).flat);
    // A = 0 always Levi-flat
    CHECK(levi_flat_quadric_test(catalog_pair(QuadricType::A(2), 2)).flat);
    // A = [[0,1],[1,0]], B = 0: not Levi-flat, witness at z1b z2 is -|a21|^2
    QuadraticPair bad(2, mat(2, {grc(0), grc(1), grc(1), grc(0)}), QMatrix(2, 2));
    auto v = levi_flat_quadric_test(bad);
    CHECK(!v.flat);
    CHECK(!v.coefficient.is_zero());
    // coefficient of z1b z2 (vars z1,z2,z1b,z2b)
    CHECK(v.obstruction.coeff({0, 1, 1, 0}) == grc(-1));
}

TEST_CASE("classify catalog representatives to themselves") {
    for (int n = 2; n <= 3; ++n) {
        std::vector<QuadricType> types{QuadricType::A(1), QuadricType::A(n), QuadricType::B(0),
                                       QuadricType::B(mpq_class(1, 4)), QuadricType::C0(),
                                       QuadricType::C1()};
        std::vector<mpq_class> gammas{0, 0, 0, mpq_class(1, 2), 0, 0};
        for (size_t i = 0; i < types.size(); ++i) {
            auto p = catalog_pair(types[i], n, gammas[i]);
            auto [t, w] = classify_quadric(p);
            CHECK(t == types[i]);
        }
    }
}

TEST_CASE("B.gamma with complex b11 of rational modulus") {
    // A = E11, B = (3+4i) E11: gamma = |3+4i| = 5
    QMatrix A(2, 2), B(2, 2);
    A(0, 0) = grc(1);
    B(0, 0) = grc(3, 4);
    auto [t, w] = classify_quadric(QuadraticPair(2, A, B));
    CHECK(t.tag == QuadricTag::Bgamma);
    CHECK(t.gamma_sq == 25);
    CHECK(t.label() == "B.5");
}

TEST_CASE("classification is invariant under random transformations with exact gamma") {
    std::mt19937_64 rng(11);
    const int n = 2;
    std::vector<QuadricType> types{QuadricType::A(1), QuadricType::A(2), QuadricType::B(0),
                                   QuadricType::B(mpq_class(9)), QuadricType::C0(),
                                   QuadricType::C1()};
    std::vector<mpq_class> gammas{0, 0, 0, 3, 0, 0};
    for (size_t i = 0; i < types.size(); ++i) {
        auto p = catalog_pair(types[i], n, gammas[i]);
        for (int it = 0; it < 25; ++it) {
            auto T = random_invertible(n, rng);
            auto l = random_nonzero_scalar(rng);
            auto q = transform_pair(p, T, l);
            auto [t, w] = classify_quadric(q);
            CHECK(t == types[i]);
        }
    }
}

TEST_CASE("witness soundness on transformed pairs") {
    std::mt19937_64 rng(13);
    std::vector<QuadricType> types{QuadricType::A(2), QuadricType::B(mpq_class(1, 4)),
                                   QuadricType::C1()};
    std::vector<mpq_class> gammas{0, mpq_class(1, 2), 0};
    for (size_t i = 0; i < types.size(); ++i) {
        auto p = catalog_pair(types[i], 2, gammas[i]);
        for (int it = 0; it < 10; ++it) {
            auto q = transform_pair(p, random_invertible(2, rng), random_nonzero_scalar(rng));
            auto [t, w] = classify_quadric(q);
            CHECK(t == types[i]);
            auto [At, Bt] = transform_pair_ext(q, w.T, w.lambda);
            CHECK(At == w.catalog_A);
            CHECK(Bt == w.catalog_B);
        }
    }
}

TEST_CASE("rank-one requirement: Levi-flat pairs with nonzero A have rank-1 A") {
    std::mt19937_64 rng(17);
    int found = 0;
    for (int it = 0; it < 200 && found < 50; ++it) {
        std::uniform_int_distribution<int> d(-1, 1);
        QMatrix A(2, 2), B(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) A(i, j) = GaussianRational(d(rng), d(rng));
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) {
                B(i, j) = GaussianRational(d(rng), d(rng));
                B(j, i) = B(i, j);
            }
        QuadraticPair p(2, A, B);
        if (p.is_degenerate()) continue;
        auto v = levi_flat_quadric_test(p);
        if (v.flat && !p.A.is_zero()) {
            ++found;
            CHECK(rank(p.A) == 1);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("rank-2 A is never Levi-flat") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> d(-2, 2);
    int done = 0;
    while (done < 40) {
        QMatrix A(2, 2), B(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) A(i, j) = GaussianRational(d(rng), d(rng));
        if (rank(A) != 2) continue;
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) {
                B(i, j) = GaussianRational(d(rng), d(rng));
                B(j, i) = B(i, j);
            }
        auto v = levi_flat_quadric_test(QuadraticPair(2, A, B));
        CHECK(!v.flat);
        CHECK(!v.coefficient.is_zero());
        ++done;
    }
}

TEST_CASE("restrict_pair to coordinate subspace keeps the C.1 pair") {
    auto p = catalog_pair(QuadricType::C1(), 3);
    QMatrix L(1, 3);
    L(0, 2) = grc(1);  // kill z3
    auto r = restrict_pair(p, L);
    CHECK(r == catalog_pair(QuadricType::C1(), 2));
}

TEST_CASE("restrict_pair along z1 = z2") {
    // n=3, A with only a12 = 1; restrict to the plane z1 = z2.
    QMatrix A(3, 3), B(3, 3);
    A(0, 1) = grc(1);
    QMatrix L(1, 3);
    L(0, 0) = grc(1);
    L(0, 1) = grc(-1);
    auto r = restrict_pair(QuadraticPair(3, A, B), L);
    CHECK(rank(r.A) == 1);
}

TEST_CASE("restriction of A.3 by generic L") {
    auto p = catalog_pair(QuadricType::A(3), 3);
    QMatrix L(1, 3);
    L(0, 0) = grc(1);
    L(0, 1) = grc(2);
    L(0, 2) = grc(3);
    auto r = restrict_pair(p, L);
    CHECK(r.A.is_zero());
    CHECK(rank(r.B) == 2);
    auto [t, w] = classify_quadric(r);
    CHECK(t == QuadricType::A(2));
}

TEST_CASE("polarization identity sanity on random subspaces") {
    // v*Av = 0 on a subspace iff all pairwise products vanish: checked by
    // comparing the pairwise criterion against evaluation on random
    // combinations.
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int it = 0; it < 50; ++it) {
        int n = 3;
        QMatrix A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = GaussianRational(d(rng), d(rng));
        // random 2-dim subspace spanned by x, y
        QMatrix x(n, 1), y(n, 1);
        for (int i = 0; i < n; ++i) {
            x(i, 0) = GaussianRational(d(rng), d(rng));
            y(i, 0) = GaussianRational(d(rng), d(rng));
        }
        bool pairwise = ((x.adjoint() * A * x)(0, 0).is_zero() &&
                         (x.adjoint() * A * y)(0, 0).is_zero() &&
                         (y.adjoint() * A * x)(0, 0).is_zero() &&
                         (y.adjoint() * A * y)(0, 0).is_zero());
        bool all = true;
        for (int a = -2; a <= 2 && all; ++a)
            for (int b = -2; b <= 2 && all; ++b)
                for (int c = -2; c <= 2 && all; ++c) {
                    // v = (a+bi) x + c y
                    QMatrix v(n, 1);
                    for (int i = 0; i < n; ++i)
                        v(i, 0) = GaussianRational(a, b) * x(i, 0) + GaussianRational(c) * y(i, 0);
                    if (!(v.adjoint() * A * v)(0, 0).is_zero()) all = false;
                }
        CHECK(pairwise == all);
    }
}
