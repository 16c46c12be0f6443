#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leviflat/extension.hpp"
#include "leviflat/matrix.hpp"
#include "leviflat/series.hpp"

namespace leviflat {

/// The two matrices of a CR singular quadric  w = A(z, conj z) + B(conj z,
/// conj z), with the forms read as  conj(z)^t A z  and  conj(z)^t B conj(z).
/// B is symmetrized on construction.
struct QuadraticPair {
    int n = 0;
    QMatrix A;
    QMatrix B;

    QuadraticPair() = default;
    QuadraticPair(int n_, QMatrix A_, QMatrix B_);

    bool is_degenerate() const { return A.is_zero() && B.is_zero(); }

    friend bool operator==(const QuadraticPair& a, const QuadraticPair& b) {
        return a.n == b.n && a.A == b.A && a.B == b.B;
    }
};

enum class QuadricTag { Ak, Bgamma, C0, C1 };

struct QuadricType {
    QuadricTag tag;
    int k = 0;             // for A.k
    mpq_class gamma_sq{0}; // for B.gamma, exactly gamma^2

    static QuadricType A(int k) { return {QuadricTag::Ak, k, 0}; }
    static QuadricType B(mpq_class gamma_sq) { return {QuadricTag::Bgamma, 0, std::move(gamma_sq)}; }
    static QuadricType C0() { return {QuadricTag::C0, 0, 0}; }
    static QuadricType C1() { return {QuadricTag::C1, 0, 0}; }

    std::string label() const;  // "A.2", "B.gamma(gamma2=1/4)", "C.0", "C.1"

    friend bool operator==(const QuadricType& a, const QuadricType& b) {
        if (a.tag != b.tag) return false;
        if (a.tag == QuadricTag::Ak) return a.k == b.k;
        if (a.tag == QuadricTag::Bgamma) return a.gamma_sq == b.gamma_sq;
        return true;
    }
    friend bool operator!=(const QuadricType& a, const QuadricType& b) { return !(a == b); }
};

/// Invertible change of coordinates carrying the input pair to the catalog
/// representative of its type: (A,B) -> (lambda T* A T, lambda T* B conj T).
/// Entries may involve adjoined square roots; field_note records that.
struct NormalizingWitness {
    ExtCtxPtr ext;
    Matrix<ExtScalar> T;
    ExtScalar lambda;
    bool field_note = false;
    /// The exact catalog image of the transformed pair (the B entry of a
    /// B.gamma type is a ring element squaring to gamma^2, fixed by
    /// conjugation and nonnegative under the canonical evaluation).
    Matrix<ExtScalar> catalog_A;
    Matrix<ExtScalar> catalog_B;
};

struct LeviVerdict {
    bool flat = true;
    // Data for the first violated sesquilinear product when not flat.
    int gen_j = -1, gen_k = -1;
    std::vector<int> monomial;
    GaussianRational coefficient;
    TruncatedSeries obstruction;  // the offending product, in (z, conj z)
};

/// (A,B) -> (lambda T* A T, lambda T* B conj T).
QuadraticPair transform_pair(const QuadraticPair& p, const QMatrix& T,
                             const GaussianRational& lambda);
/// Same transformation over the witness ring.
std::pair<Matrix<ExtScalar>, Matrix<ExtScalar>> transform_pair_ext(const QuadraticPair& p,
                                                                   const Matrix<ExtScalar>& T,
                                                                   const ExtScalar& lambda);

/// Decides Levi-flatness of the quadric by checking that all sesquilinear
/// products of the tangent-kernel generators against A vanish identically.
LeviVerdict levi_flat_quadric_test(const QuadraticPair& p);

/// Full classification with a normalizing witness.  Requires a Levi-flat
/// nondegenerate pair.
std::pair<QuadricType, NormalizingWitness> classify_quadric(const QuadraticPair& p);

/// Pullback of the pair to ker L (an (n-2) x n full-rank matrix), as a
/// 2-dimensional pair.
QuadraticPair restrict_pair(const QuadraticPair& p, const QMatrix& L);

/// The Theorem-catalog representative with rational data (B.gamma uses
/// gamma^2 only when gamma is rational; pass gamma itself).
QuadraticPair catalog_pair(const QuadricType& t, int n, const mpq_class& gamma = 0);

/// Defining series w = rho(z, conj z) of the pair over variables
/// z1..zn, z1b..znb (paired).
TruncatedSeries quadric_rho(const QuadraticPair& p);
SpacePtr quadric_space(int n);

}  // namespace leviflat
