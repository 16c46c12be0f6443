#include "leviflat/matrix.hpp"

namespace leviflat {

namespace {

/// Row-reduces m in place; returns pivot columns.  When rhs is nonnull it
/// receives the same row operations.
std::vector<int> row_reduce(QMatrix& m, QMatrix* rhs) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        if (rhs)
            for (int j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(p, j), (*rhs)(r, j));
        GaussianRational inv = GaussianRational(1) / m(r, c);
        for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        if (rhs)
            for (int j = 0; j < rhs->cols(); ++j) (*rhs)(r, j) = (*rhs)(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            GaussianRational f = m(i, c);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
            if (rhs)
                for (int j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(QMatrix m) { return static_cast<int>(row_reduce(m, nullptr).size()); }

GaussianRational determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    GaussianRational det(1);
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return GaussianRational(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        GaussianRational inv = GaussianRational(1) / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            GaussianRational f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    QMatrix a = m;
    QMatrix id = QMatrix::identity(m.rows());
    auto pivots = row_reduce(a, &id);
    if (static_cast<int>(pivots.size()) != m.rows())
        throw std::invalid_argument("singular matrix");
    return id;
}

QMatrix kernel_basis(const QMatrix& m) {
    QMatrix a = m;
    auto pivots = row_reduce(a, nullptr);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    int k = a.cols() - static_cast<int>(pivots.size());
    QMatrix basis(a.cols(), k);
    int col = 0;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, col) = GaussianRational(1);
        for (size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], col) = -a(static_cast<int>(r), free);
        ++col;
    }
    return basis;
}

QMatrix solve(const QMatrix& m, const QMatrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("shape mismatch in solve");
    QMatrix a = m;
    QMatrix rhs = b;
    auto pivots = row_reduce(a, &rhs);
    QMatrix x(m.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = rhs(static_cast<int>(r), j);
    // Rows beyond the rank must have vanished on the right as well.
    for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!rhs(i, j).is_zero()) throw std::invalid_argument("inconsistent linear system");
    return x;
}

}  // namespace leviflat
