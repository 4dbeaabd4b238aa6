// Dense exact matrices and the elimination primitives built on them.
#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starinv/errors.hpp"
#include "starinv/field.hpp"

namespace starinv {

template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <typename S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

}  // namespace detail

template <typename S>
Matrix<S> add(const Matrix<S>& A, const Matrix<S>& B) {
    detail::require(A.rows() == B.rows() && A.cols() == B.cols(), "add: shapes differ");
    return A + B;
}

template <typename S>
Matrix<S> sub(const Matrix<S>& A, const Matrix<S>& B) {
    detail::require(A.rows() == B.rows() && A.cols() == B.cols(), "sub: shapes differ");
    return A - B;
}

template <typename S>
Matrix<S> mul(const Matrix<S>& A, const Matrix<S>& B) {
    detail::require(A.cols() == B.rows(), "mul: inner dimensions differ");
    return A * B;
}

template <typename S>
Matrix<S> scalar_mul(const S& c, const Matrix<S>& A) {
    return A.unaryExpr([&c](const S& v) { return c * v; });
}

/// A^k by repeated squaring; A^0 is the identity.
template <typename S>
Matrix<S> mat_pow(const Matrix<S>& A, std::size_t k) {
    detail::require(A.rows() == A.cols(), "mat_pow: matrix is not square");
    Matrix<S> result = Matrix<S>::Identity(A.rows(), A.cols());
    Matrix<S> base = A;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

/// Entrywise involution without transposing.
template <typename S>
Matrix<S> conj(const Matrix<S>& A) {
    return A.unaryExpr([](const S& v) { return involve(v); });
}

/// Conjugate transpose under the field's involution.
template <typename S>
Matrix<S> star(const Matrix<S>& A) {
    return conj(A).transpose();
}

template <typename S>
bool is_zero(const Matrix<S>& A) {
    for (Index j = 0; j < A.cols(); ++j)
        for (Index i = 0; i < A.rows(); ++i)
            if (!is_zero(A(i, j))) return false;
    return true;
}

/// Exact structural equality (shapes included).
template <typename S>
bool equal(const Matrix<S>& A, const Matrix<S>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (Index j = 0; j < A.cols(); ++j)
        for (Index i = 0; i < A.rows(); ++i)
            if (A(i, j) != B(i, j)) return false;
    return true;
}

/// First position (row, col) where A and B differ; nullopt when equal.
template <typename S>
std::optional<std::pair<Index, Index>> first_difference(const Matrix<S>& A, const Matrix<S>& B) {
    detail::require(A.rows() == B.rows() && A.cols() == B.cols(), "compare: shapes differ");
    for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j)
            if (A(i, j) != B(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

template <typename S>
struct RowEchelon {
    Matrix<S> reduced;   // RREF of A
    Index rank = 0;
    Matrix<S> rowops;    // invertible, rowops * A == reduced
    std::vector<Index> pivots;
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry at or below the current row, columns scanned left to right.
template <typename S>
RowEchelon<S> rref_rank(const Matrix<S>& A) {
    RowEchelon<S> out;
    Matrix<S> R = A;
    Matrix<S> E = Matrix<S>::Identity(A.rows(), A.rows());
    Index row = 0;
    for (Index col = 0; col < R.cols() && row < R.rows(); ++col) {
        Index pivot = row;
        while (pivot < R.rows() && is_zero(R(pivot, col))) ++pivot;
        if (pivot == R.rows()) continue;
        if (pivot != row) {
            R.row(pivot).swap(R.row(row));
            E.row(pivot).swap(E.row(row));
        }
        const S scale = inverse(R(row, col));
        R.row(row) = scalar_mul<S>(scale, R.row(row));
        E.row(row) = scalar_mul<S>(scale, E.row(row));
        for (Index r = 0; r < R.rows(); ++r) {
            if (r == row || is_zero(R(r, col))) continue;
            const S factor = R(r, col);
            R.row(r) -= scalar_mul<S>(factor, R.row(row));
            E.row(r) -= scalar_mul<S>(factor, E.row(row));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = std::move(R);
    out.rowops = std::move(E);
    return out;
}

template <typename S>
Index rank(const Matrix<S>& A) {
    return rref_rank(A).rank;
}

template <typename S>
struct FullRankFactorization {
    Matrix<S> F;  // full column rank
    Matrix<S> G;  // full row rank
};

/// A = F G with G the nonzero rows of RREF(A) and F the pivot columns of A.
template <typename S>
FullRankFactorization<S> full_rank_factorization(const Matrix<S>& A) {
    auto ech = rref_rank(A);
    if (ech.rank == 0) throw ZeroMatrix("full rank factorization of a zero matrix");
    FullRankFactorization<S> out;
    out.G = ech.reduced.topRows(ech.rank);
    out.F.resize(A.rows(), ech.rank);
    for (Index k = 0; k < ech.rank; ++k) out.F.col(k) = A.col(ech.pivots[static_cast<std::size_t>(k)]);
    return out;
}

/// Some X with A X A = A, via two-sided reduction P A Q = [I_r 0; 0 0].
/// With P the RREF row operations, the pivot columns of P A are e_1..e_r, so
/// clearing the remaining columns never touches the pivot columns of Q and
/// only their r selector columns survive: X = Q_r P_r.
template <typename S>
Matrix<S> inner_inverse(const Matrix<S>& A) {
    auto ech = rref_rank(A);
    const Index r = ech.rank;
    if (r == 0) return Matrix<S>::Zero(A.cols(), A.rows());
    Matrix<S> X = Matrix<S>::Zero(A.cols(), A.rows());
    for (Index k = 0; k < r; ++k) X.row(ech.pivots[static_cast<std::size_t>(k)]) = ech.rowops.row(k);
    return X;
}

/// Bijection on {0..n-1}; its matrix P satisfies P e_i = e_{image[i]}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t v : image_) {
            if (v >= image_.size() || seen[v]) throw InvalidArgument("permutation image is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> im(n);
        for (std::size_t i = 0; i < n; ++i) im[i] = i;
        return Permutation(std::move(im));
    }

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const { return image_; }

    Permutation inverse() const {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
        return Permutation(std::move(inv));
    }

    /// (this o other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const {
        if (other.size() != size()) throw DimensionMismatch("compose: permutation sizes differ");
        std::vector<std::size_t> im(size());
        for (std::size_t i = 0; i < size(); ++i) im[i] = image_[other(i)];
        return Permutation(std::move(im));
    }

    template <typename S>
    Matrix<S> matrix() const {
        const auto n = static_cast<Index>(size());
        Matrix<S> P = Matrix<S>::Zero(n, n);
        for (std::size_t i = 0; i < size(); ++i) P(static_cast<Index>(image_[i]), static_cast<Index>(i)) = S(1);
        return P;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::size_t> image_;
};

/// P^{-1} A P, i.e. result(i, j) = A(p(i), p(j)).
template <typename S>
Matrix<S> perm_similar(const Matrix<S>& A, const Permutation& p) {
    detail::require(A.rows() == A.cols(), "perm_similar: matrix is not square");
    detail::require(static_cast<std::size_t>(A.rows()) == p.size(), "perm_similar: permutation order differs");
    const auto n = A.rows();
    Matrix<S> out(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            out(i, j) = A(static_cast<Index>(p(static_cast<std::size_t>(i))), static_cast<Index>(p(static_cast<std::size_t>(j))));
    return out;
}

/// Inverse of perm_similar: P A P^{-1}.
template <typename S>
Matrix<S> perm_unsimilar(const Matrix<S>& A, const Permutation& p) {
    return perm_similar(A, p.inverse());
}

}  // namespace starinv
