#include "leviflat/quadric.hpp"

#include <sstream>

namespace leviflat {

namespace {

GaussianRational half() { return GaussianRational(mpq_class(1, 2)); }

Matrix<ExtScalar> ext_lift(const QMatrix& m, const ExtCtxPtr& ctx) {
    Matrix<ExtScalar> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = ExtScalar(ctx, m(i, j));
    return r;
}

Matrix<ExtScalar> ext_unit(const ExtCtxPtr& ctx, int n, int i, int j) {
    Matrix<ExtScalar> r(n, n);
    r(i, j) = ExtScalar(ctx, GaussianRational(1));
    return r;
}

}  // namespace

QuadraticPair::QuadraticPair(int n_, QMatrix A_, QMatrix B_) : n(n_), A(std::move(A_)), B(std::move(B_)) {
    if (A.rows() != n || A.cols() != n || B.rows() != n || B.cols() != n)
        throw std::invalid_argument("matrix dimensions do not match n");
    QMatrix sym(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym(i, j) = (B(i, j) + B(j, i)) * half();
    B = std::move(sym);
}

std::string QuadricType::label() const {
    switch (tag) {
        case QuadricTag::Ak: return "A." + std::to_string(k);
        case QuadricTag::C0: return "C.0";
        case QuadricTag::C1: return "C.1";
        case QuadricTag::Bgamma: {
            mpq_class g;
            if (rational_sqrt(gamma_sq, &g)) return "B." + g.get_str();
            return "B.sqrt(" + gamma_sq.get_str() + ")";
        }
    }
    return "?";
}

SpacePtr quadric_space(int n) {
    std::vector<std::string> names;
    for (int j = 1; j <= n; ++j) names.push_back("z" + std::to_string(j));
    for (int j = 1; j <= n; ++j) names.push_back("z" + std::to_string(j) + "b");
    auto sp = VariableSpace::make(names);
    for (int j = 1; j <= n; ++j)
        sp = sp->with_pair("z" + std::to_string(j), "z" + std::to_string(j) + "b");
    return sp;
}

TruncatedSeries quadric_rho(const QuadraticPair& p) {
    auto sp = quadric_space(p.n);
    TruncatedSeries rho = TruncatedSeries::zero(sp);
    for (int j = 0; j < p.n; ++j) {
        for (int k = 0; k < p.n; ++k) {
            if (!p.A(j, k).is_zero()) {
                std::vector<int> e(2 * p.n, 0);
                e[p.n + j] += 1;
                e[k] += 1;
                rho += TruncatedSeries::monomial(sp, e, p.A(j, k));
            }
            if (!p.B(j, k).is_zero()) {
                std::vector<int> e(2 * p.n, 0);
                e[p.n + j] += 1;
                e[p.n + k] += 1;
                rho += TruncatedSeries::monomial(sp, e, p.B(j, k));
            }
        }
    }
    return rho;
}

QuadraticPair transform_pair(const QuadraticPair& p, const QMatrix& T,
                             const GaussianRational& lambda) {
    if (T.rows() != p.n || T.cols() != p.n) throw std::invalid_argument("T has wrong shape");
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    if (determinant(T).is_zero()) throw std::invalid_argument("T must be invertible");
    QMatrix A2 = (T.adjoint() * p.A * T).scaled(lambda);
    QMatrix B2 = (T.adjoint() * p.B * T.conj()).scaled(lambda);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (B2(i, j) != B2(j, i)) throw std::logic_error("transformed B lost symmetry");
    return QuadraticPair(p.n, std::move(A2), std::move(B2));
}

std::pair<Matrix<ExtScalar>, Matrix<ExtScalar>> transform_pair_ext(const QuadraticPair& p,
                                                                   const Matrix<ExtScalar>& T,
                                                                   const ExtScalar& lambda) {
    ExtCtxPtr ctx = lambda.ctx();
    for (int i = 0; !ctx && i < T.rows(); ++i)
        for (int j = 0; !ctx && j < T.cols(); ++j) ctx = T(i, j).ctx();
    auto A = ext_lift(p.A, ctx);
    auto B = ext_lift(p.B, ctx);
    auto A2 = (T.adjoint() * A * T).scaled(lambda);
    auto B2 = (T.adjoint() * B * T.conj()).scaled(lambda);
    return {A2, B2};
}

LeviVerdict levi_flat_quadric_test(const QuadraticPair& p) {
    if (p.is_degenerate())
        throw std::invalid_argument("degenerate pair: A and B both vanish");
    auto sp = quadric_space(p.n);
    TruncatedSeries rho = quadric_rho(p);
    TruncatedSeries rho_bar = rho.conjugate();

    std::vector<TruncatedSeries> D;
    D.reserve(p.n);
    for (int m = 1; m <= p.n; ++m) D.push_back(rho_bar.differentiate("z" + std::to_string(m)));
    int pivot = -1;
    for (int m = 0; m < p.n; ++m)
        if (!D[m].is_zero()) {
            pivot = m;
            break;
        }
    if (pivot < 0) throw std::logic_error("vanishing tangent functional on a nondegenerate pair");

    // Kernel generators of v -> sum v_m D_m:  v(j) = D_j e_pivot - D_pivot e_j.
    std::vector<int> gens;
    for (int j = 0; j < p.n; ++j)
        if (j != pivot) gens.push_back(j);

    auto component = [&](int gen, int slot) -> TruncatedSeries {
        if (slot == pivot) return D[gen];
        if (slot == gen) return -D[pivot];
        return TruncatedSeries::zero(sp);
    };

    LeviVerdict verdict;
    for (size_t a = 0; a < gens.size(); ++a) {
        for (size_t b = 0; b < gens.size(); ++b) {
            TruncatedSeries h = TruncatedSeries::zero(sp);
            for (int l = 0; l < p.n; ++l) {
                for (int m = 0; m < p.n; ++m) {
                    if (p.A(l, m).is_zero()) continue;
                    h += (component(static_cast<int>(gens[a]), l).conjugate() *
                          component(static_cast<int>(gens[b]), m))
                             .scaled(p.A(l, m));
                }
            }
            if (!h.is_zero()) {
                verdict.flat = false;
                verdict.gen_j = gens[a];
                verdict.gen_k = gens[b];
                const auto& [mono, coeff] = *h.terms().begin();
                verdict.monomial = mono.exp;
                verdict.coefficient = coeff;
                verdict.obstruction = h;
                return verdict;
            }
        }
    }
    verdict.flat = true;
    return verdict;
}

namespace {

/// Symmetric congruence diagonalization: returns S and d with
/// S^t B S = diag(d), d's nonzero entries first.
std::pair<QMatrix, std::vector<GaussianRational>> symmetric_diagonalize(const QMatrix& B) {
    int n = B.rows();
    QMatrix M = B;
    QMatrix S = QMatrix::identity(n);
    auto col_op = [&](int dst, int src, const GaussianRational& f) {
        // col_dst += f * col_src, congruently on M, plainly on S.
        for (int i = 0; i < n; ++i) M(i, dst) += f * M(i, src);
        for (int j = 0; j < n; ++j) M(dst, j) += f * M(src, j);
        for (int i = 0; i < n; ++i) S(i, dst) += f * S(i, src);
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < n; ++i) std::swap(M(i, a), M(i, b));
        for (int j = 0; j < n; ++j) std::swap(M(a, j), M(b, j));
        for (int i = 0; i < n; ++i) std::swap(S(i, a), S(i, b));
    };
    std::vector<GaussianRational> d;
    for (int i = 0; i < n; ++i) {
        if (M(i, i).is_zero()) {
            int jd = -1;
            for (int j = i + 1; j < n; ++j)
                if (!M(j, j).is_zero()) {
                    jd = j;
                    break;
                }
            if (jd >= 0) {
                col_swap(i, jd);
            } else {
                int ja = -1, jb = -1;
                for (int a = i; a < n && ja < 0; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (!M(a, b).is_zero()) {
                            ja = a;
                            jb = b;
                            break;
                        }
                if (ja < 0) break;  // remaining block is zero
                col_op(ja, jb, GaussianRational(1));  // makes M(ja,ja) = 2 M(ja,jb)
                if (ja != i) col_swap(i, ja);
            }
        }
        GaussianRational piv = M(i, i);
        d.push_back(piv);
        GaussianRational inv = GaussianRational(1) / piv;
        for (int j = i + 1; j < n; ++j) {
            if (M(i, j).is_zero()) continue;
            col_op(j, i, -M(i, j) * inv);
        }
    }
    return {S, d};
}

/// Rank-one factorization A = u v^* with u the first nonzero column.
/// Returns false when rank(A) != 1.
bool rank_one_factor(const QMatrix& A, std::vector<GaussianRational>* u,
                     std::vector<GaussianRational>* v) {
    int n = A.rows();
    int c0 = -1;
    for (int c = 0; c < n && c0 < 0; ++c)
        for (int r = 0; r < n; ++r)
            if (!A(r, c).is_zero()) {
                c0 = c;
                break;
            }
    if (c0 < 0) return false;
    int r0 = -1;
    for (int r = 0; r < n; ++r)
        if (!A(r, c0).is_zero()) {
            r0 = r;
            break;
        }
    u->assign(n, GaussianRational());
    v->assign(n, GaussianRational());
    for (int r = 0; r < n; ++r) (*u)[r] = A(r, c0);
    GaussianRational inv = GaussianRational(1) / A(r0, c0);
    // conj(v_k) = A(r0,k) / u_{r0}
    for (int k = 0; k < n; ++k) (*v)[k] = (A(r0, k) * inv).conj();
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k)
            if (A(r, k) != (*u)[r] * (*v)[k].conj()) return false;
    return true;
}

bool parallel(const std::vector<GaussianRational>& u, const std::vector<GaussianRational>& v) {
    for (size_t j = 0; j < u.size(); ++j)
        for (size_t k = j + 1; k < u.size(); ++k)
            if (u[j] * v[k] != u[k] * v[j]) return false;
    return true;
}

/// Row matrix of the functional x -> sum conj(a_l) x_l.
QMatrix functional_row(const std::vector<GaussianRational>& a) {
    QMatrix r(1, static_cast<int>(a.size()));
    for (size_t l = 0; l < a.size(); ++l) r(0, static_cast<int>(l)) = a[l].conj();
    return r;
}

}  // namespace

std::pair<QuadricType, NormalizingWitness> classify_quadric(const QuadraticPair& p) {
    auto lf = levi_flat_quadric_test(p);
    if (!lf.flat) throw std::invalid_argument("pair is not Levi-flat: classification refused");
    const int n = p.n;
    auto ctx = std::make_shared<ExtensionContext>();

    NormalizingWitness w;
    w.ext = ctx;

    if (p.A.is_zero()) {
        auto [S, d] = symmetric_diagonalize(p.B);
        int k = 0;
        for (const auto& v : d)
            if (!v.is_zero()) ++k;
        // Unit-normalize the k nonzero diagonal entries.
        Matrix<ExtScalar> Sd = ext_lift(S, ctx);
        Matrix<ExtScalar> D(n, n);
        for (int j = 0; j < n; ++j) D(j, j) = ExtScalar(ctx, GaussianRational(1));
        for (int j = 0; j < k; ++j) {
            ExtScalar root = ExtScalar::sqrt(ctx, d[j]);  // root^2 = d_j
            // 1/sqrt(d_j) = root / d_j
            D(j, j) = root.scaled(GaussianRational(1) / d[j]);
        }
        Matrix<ExtScalar> SD = Sd * D;
        w.T = SD.conj();
        w.lambda = ExtScalar(ctx, GaussianRational(1));
        w.catalog_A = Matrix<ExtScalar>(n, n);
        w.catalog_B = Matrix<ExtScalar>(n, n);
        for (int j = 0; j < k; ++j) w.catalog_B(j, j) = ExtScalar(ctx, GaussianRational(1));
        auto [At, Bt] = transform_pair_ext(p, w.T, w.lambda);
        if (!(At == w.catalog_A) || !(Bt == w.catalog_B))
            throw std::logic_error("A.k witness verification failed");
        w.field_note = ctx->count() > 0;
        return {QuadricType::A(k), std::move(w)};
    }

    std::vector<GaussianRational> u, v;
    if (!rank_one_factor(p.A, &u, &v))
        throw std::invalid_argument("Levi-flat quadric with A of rank 2 or more: impossible input");

    QMatrix vrow = functional_row(v);  // v^* as a row
    QMatrix urow = functional_row(u);  // u^* as a row
    QMatrix T1(n, n);

    if (parallel(u, v)) {
        // Bishop-like branch: normalize A to E11.
        QMatrix rhs(1, 1);
        rhs(0, 0) = GaussianRational(1);
        QMatrix t1 = solve(vrow, rhs);
        QMatrix ker = kernel_basis(vrow);
        for (int i = 0; i < n; ++i) {
            T1(i, 0) = t1(i, 0);
            for (int j = 1; j < n; ++j) T1(i, j) = ker(i, j - 1);
        }
        QuadraticPair q1 = transform_pair(p, T1, GaussianRational(1));
        GaussianRational mu = q1.A(0, 0);
        GaussianRational lam1 = GaussianRational(1) / mu;
        QuadraticPair q2 = transform_pair(p, T1, lam1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == 0 && j == 0) {
                    if (q2.A(0, 0) != GaussianRational(1))
                        throw std::logic_error("A normalization failed");
                    continue;
                }
                if (!q2.A(i, j).is_zero()) throw std::logic_error("A normalization failed");
                if (!q2.B(i, j).is_zero())
                    throw std::invalid_argument("pair is not Levi-flat: stray B entries");
            }
        GaussianRational b11 = q2.B(0, 0);
        mpq_class gamma_sq = b11.norm2();
        Matrix<ExtScalar> Tt = ext_lift(T1, ctx);
        ExtScalar lambda = ExtScalar(ctx, lam1);
        ExtScalar gamma_elt(ctx);
        if (!b11.is_zero()) {
            ExtScalar q = ExtScalar::sqrt(ctx, b11);
            ExtScalar pconj = q.conj();
            ExtScalar pq = pconj * q;
            // Final diagonal scaling d = q with lambda2 = pq / gamma^2 fixes
            // A and rotates b11 onto |b11|.
            Matrix<ExtScalar> D(n, n);
            for (int j = 0; j < n; ++j) D(j, j) = ExtScalar(ctx, GaussianRational(1));
            D(0, 0) = q;
            Tt = Tt * D;
            lambda = lambda * pq.scaled(GaussianRational(mpq_class(1) / gamma_sq));
            gamma_elt = pq;
        }
        w.T = Tt;
        w.lambda = lambda;
        w.catalog_A = ext_unit(ctx, n, 0, 0);
        w.catalog_B = Matrix<ExtScalar>(n, n);
        w.catalog_B(0, 0) = gamma_elt;
        auto [At, Bt] = transform_pair_ext(p, w.T, w.lambda);
        if (!(At == w.catalog_A) || !(Bt == w.catalog_B))
            throw std::logic_error("B.gamma witness verification failed");
        w.field_note = ctx->count() > 0;
        return {QuadricType::B(gamma_sq), std::move(w)};
    }

    // C branch: u, v independent; normalize A to E12.
    QMatrix cond(2, n), rhs(2, 1);
    for (int l = 0; l < n; ++l) {
        cond(0, l) = vrow(0, l);
        cond(1, l) = urow(0, l);
    }
    rhs(0, 0) = GaussianRational(0);
    rhs(1, 0) = GaussianRational(1);
    QMatrix t1 = solve(cond, rhs);
    rhs(0, 0) = GaussianRational(1);
    rhs(1, 0) = GaussianRational(0);
    QMatrix t2 = solve(cond, rhs);
    QMatrix ker = kernel_basis(cond);
    for (int i = 0; i < n; ++i) {
        T1(i, 0) = t1(i, 0);
        T1(i, 1) = t2(i, 0);
        for (int j = 2; j < n; ++j) T1(i, j) = ker(i, j - 2);
    }
    QuadraticPair q1 = transform_pair(p, T1, GaussianRational(1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GaussianRational expect = (i == 0 && j == 1) ? GaussianRational(1) : GaussianRational();
            if (q1.A(i, j) != expect) throw std::logic_error("A normalization to E12 failed");
            if ((i != 0 || j != 0) && !q1.B(i, j).is_zero())
                throw std::invalid_argument("pair is not Levi-flat: stray B entries");
        }
    GaussianRational b11 = q1.B(0, 0);
    if (b11.is_zero()) {
        w.T = ext_lift(T1, ctx);
        w.lambda = ExtScalar(ctx, GaussianRational(1));
        w.catalog_A = ext_unit(ctx, n, 0, 1);
        w.catalog_B = Matrix<ExtScalar>(n, n);
        auto [At, Bt] = transform_pair_ext(p, w.T, w.lambda);
        if (!(At == w.catalog_A) || !(Bt == w.catalog_B))
            throw std::logic_error("C.0 witness verification failed");
        w.field_note = ctx->count() > 0;
        return {QuadricType::C0(), std::move(w)};
    }
    // C.1: scale with diag(s, t, 1, ...) where conj(s)^2 b11 = 1, t = 1/conj(s).
    ExtScalar q = ExtScalar::sqrt(ctx, b11);  // q^2 = b11
    ExtScalar pc = q.conj();
    ExtScalar s = pc.scaled(GaussianRational(1) / b11.conj());  // s = conj(q)/conj(b11)
    ExtScalar t = q;                                            // 1/conj(s) = q
    Matrix<ExtScalar> D(n, n);
    for (int j = 0; j < n; ++j) D(j, j) = ExtScalar(ctx, GaussianRational(1));
    D(0, 0) = s;
    D(1, 1) = t;
    w.T = ext_lift(T1, ctx) * D;
    w.lambda = ExtScalar(ctx, GaussianRational(1));
    w.catalog_A = ext_unit(ctx, n, 0, 1);
    w.catalog_B = ext_unit(ctx, n, 0, 0);
    auto [At, Bt] = transform_pair_ext(p, w.T, w.lambda);
    if (!(At == w.catalog_A) || !(Bt == w.catalog_B))
        throw std::logic_error("C.1 witness verification failed");
    w.field_note = ctx->count() > 0;
    return {QuadricType::C1(), std::move(w)};
}

QuadraticPair restrict_pair(const QuadraticPair& p, const QMatrix& L) {
    if (L.cols() != p.n || L.rows() != p.n - 2)
        throw std::invalid_argument("L must be (n-2) x n");
    if (rank(L) != p.n - 2) throw std::invalid_argument("L is rank-deficient");
    QMatrix K = kernel_basis(L);  // n x 2
    QMatrix A2 = K.adjoint() * p.A * K;
    QMatrix B2 = K.adjoint() * p.B * K.conj();
    QuadraticPair r(2, std::move(A2), std::move(B2));
    if (r.is_degenerate())
        throw std::invalid_argument("restriction is identically zero on ker L");
    return r;
}

QuadraticPair catalog_pair(const QuadricType& t, int n, const mpq_class& gamma) {
    QMatrix A(n, n), B(n, n);
    switch (t.tag) {
        case QuadricTag::Ak:
            if (t.k < 1 || t.k > n) throw std::invalid_argument("A.k needs 1 <= k <= n");
            for (int j = 0; j < t.k; ++j) B(j, j) = GaussianRational(1);
            break;
        case QuadricTag::Bgamma: {
            if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
            if (mpq_class(gamma * gamma) != t.gamma_sq)
                throw std::invalid_argument("gamma does not match gamma^2");
            A(0, 0) = GaussianRational(1);
            B(0, 0) = GaussianRational(gamma);
            break;
        }
        case QuadricTag::C0:
            A(0, 1) = GaussianRational(1);
            break;
        case QuadricTag::C1:
            A(0, 1) = GaussianRational(1);
            B(0, 0) = GaussianRational(1);
            break;
    }
    return QuadraticPair(n, std::move(A), std::move(B));
}

}  // namespace leviflat
