// General-purpose generalized inverses of arbitrary square matrices, built
// only from ranks and inner inverses. Every returned value is re-checked
// against its defining equations before it leaves this module.
#pragma once

#include <optional>
#include <string>

#include "starinv/axioms.hpp"
#include "starinv/matrix.hpp"

namespace starinv {

template <typename S>
struct OracleResult {
    bool exists = false;
    std::optional<Matrix<S>> value;
    std::string witness;  // failed criterion when !exists

    static OracleResult found(Matrix<S> v) { return {true, std::move(v), {}}; }
    static OracleResult absent(std::string why) { return {false, std::nullopt, std::move(why)}; }
};

/// Smallest k with rank(A^k) == rank(A^{k+1}).
template <typename S>
std::size_t index_of(const Matrix<S>& A) {
    detail::require(A.rows() == A.cols(), "index_of: matrix is not square");
    Index prev = A.rows();
    Matrix<S> power = A;
    for (std::size_t k = 0;; ++k) {
        const Index r = rank(power);
        if (r == prev) return k;
        prev = r;
        power = power * A;
    }
}

namespace detail {

template <typename S>
void verify_or_throw(const AxiomVerdict& v, const char* what) {
    if (v.satisfied) return;
    std::string msg = std::string(what) + ": post-verification failed";
    for (const auto& f : v.failures)
        msg += "; " + f.equation + " at (" + std::to_string(f.row) + "," + std::to_string(f.col) + ")";
    throw InternalError(msg);
}

}  // namespace detail

namespace detail {

template <typename S>
Matrix<S> drazin_at(const Matrix<S>& A, std::size_t k) {
    const Matrix<S> Ak = mat_pow(A, k);
    Matrix<S> X = Ak * inner_inverse<S>(mat_pow(A, 2 * k + 1)) * Ak;
    verify_or_throw<S>(check_drazin(A, X, k), "drazin_oracle");
    return X;
}

}  // namespace detail

/// A^D = A^k (A^{2k+1})^- A^k with k = i(A).
template <typename S>
Matrix<S> drazin_oracle(const Matrix<S>& A) {
    return detail::drazin_at(A, index_of(A));
}

template <typename S>
OracleResult<S> group_oracle(const Matrix<S>& A) {
    const std::size_t k = index_of(A);
    if (k > 1) return OracleResult<S>::absent("index " + std::to_string(k) + " > 1");
    return OracleResult<S>::found(detail::drazin_at(A, k));
}

/// (A*A)^- A*, available iff rank(A*A) == rank(A).
template <typename S>
OracleResult<S> one_three_oracle(const Matrix<S>& A) {
    const Matrix<S> As = star(A);
    const Matrix<S> gram = As * A;
    if (rank(gram) != rank(A)) return OracleResult<S>::absent("rank(A*A) != rank(A)");
    Matrix<S> X = inner_inverse(gram) * As;
    detail::verify_or_throw<S>(check_penrose(A, X, kPenrose1 | kPenrose3), "one_three_oracle");
    return OracleResult<S>::found(std::move(X));
}

/// A* (AA*)^-, available iff rank(AA*) == rank(A).
template <typename S>
OracleResult<S> one_four_oracle(const Matrix<S>& A) {
    const Matrix<S> As = star(A);
    const Matrix<S> gram = A * As;
    if (rank(gram) != rank(A)) return OracleResult<S>::absent("rank(AA*) != rank(A)");
    Matrix<S> X = As * inner_inverse(gram);
    detail::verify_or_throw<S>(check_penrose(A, X, kPenrose1 | kPenrose4), "one_four_oracle");
    return OracleResult<S>::found(std::move(X));
}

/// A^dag = A^{(1,4)} A A^{(1,3)}.
template <typename S>
OracleResult<S> moore_penrose_oracle(const Matrix<S>& A) {
    auto left = one_four_oracle(A);
    if (!left.exists) return OracleResult<S>::absent("no (1,4)-inverse: " + left.witness);
    auto right = one_three_oracle(A);
    if (!right.exists) return OracleResult<S>::absent("no (1,3)-inverse: " + right.witness);
    Matrix<S> X = *left.value * A * *right.value;
    detail::verify_or_throw<S>(check_penrose(A, X), "moore_penrose_oracle");
    return OracleResult<S>::found(std::move(X));
}

namespace detail {

template <typename S>
OracleResult<S> core_ep_at(const Matrix<S>& A, std::size_t power, const Matrix<S>& D, bool dual) {
    const Matrix<S> Am = mat_pow(A, power);
    auto inner = dual ? one_four_oracle(Am) : one_three_oracle(Am);
    if (!inner.exists) return OracleResult<S>::absent(dual ? "A^m has no (1,4)-inverse" : "A^m has no (1,3)-inverse");
    Matrix<S> X = dual ? Matrix<S>(*inner.value * Am * D) : Matrix<S>(D * Am * *inner.value);
    verify_or_throw<S>(check_core_ep(A, X, power, dual), dual ? "dual_core_ep_oracle" : "core_ep_oracle");
    return OracleResult<S>::found(std::move(X));
}

template <typename S>
OracleResult<S> core_ep_checked(const Matrix<S>& A, std::optional<std::size_t> m, bool dual) {
    const std::size_t k = index_of(A);
    const std::size_t power = m.value_or(k);
    if (power < k) {
        throw IndexTooSmall(std::string(dual ? "dual_core_ep_oracle" : "core_ep_oracle") + ": m=" + std::to_string(power) +
                            " < i(A)=" + std::to_string(k));
    }
    return core_ep_at(A, power, drazin_at(A, k), dual);
}

}  // namespace detail

/// A^cep = A^D A^m (A^m)^{(1,3)}; m defaults to i(A).
template <typename S>
OracleResult<S> core_ep_oracle(const Matrix<S>& A, std::optional<std::size_t> m = std::nullopt) {
    return detail::core_ep_checked(A, m, false);
}

/// A_cep = (A^m)^{(1,4)} A^m A^D; m defaults to i(A).
template <typename S>
OracleResult<S> dual_core_ep_oracle(const Matrix<S>& A, std::optional<std::size_t> m = std::nullopt) {
    return detail::core_ep_checked(A, m, true);
}

/// Composite from already computed constituents; `cep` is the dual core EP
/// inverse for CEPMP and GC.
template <typename S>
OracleResult<S> composite_from(const Matrix<S>& A, CompositeKind kind, const OracleResult<S>& mp, const OracleResult<S>& cep) {
    const bool dual = kind == CompositeKind::CEPMP || kind == CompositeKind::GC;
    if (!mp.exists) return OracleResult<S>::absent("no Moore-Penrose inverse: " + mp.witness);
    if (!cep.exists) return OracleResult<S>::absent(std::string(dual ? "no dual core EP inverse: " : "no core EP inverse: ") + cep.witness);
    const Matrix<S>& P = *mp.value;
    const Matrix<S>& C = *cep.value;
    Matrix<S> X;
    switch (kind) {
        case CompositeKind::MPCEP: X = P * A * C; break;
        case CompositeKind::CEPMP: X = C * A * P; break;
        case CompositeKind::GDC: X = P * C * A; break;
        case CompositeKind::GC: X = A * C * P; break;
    }
    detail::verify_or_throw<S>(check_composite(A, X, kind, CompositeAux<S>{P, C}), "composite_oracle");
    return OracleResult<S>::found(std::move(X));
}

/// MPCEP = A^dag A A^cep, CEPMP = A_cep A A^dag, GDC = A^dag A^cep A, GC = A A_cep A^dag.
template <typename S>
OracleResult<S> composite_oracle(const Matrix<S>& A, CompositeKind kind) {
    detail::require(A.rows() == A.cols(), "composite_oracle: matrix is not square");
    const bool dual = kind == CompositeKind::CEPMP || kind == CompositeKind::GC;
    return composite_from(A, kind, moore_penrose_oracle(A), dual ? dual_core_ep_oracle(A) : core_ep_oracle(A));
}

/// Every oracle for one matrix, sharing the index and Drazin inverse.
template <typename S>
struct OracleSuite {
    std::size_t index = 0;
    Matrix<S> drazin;
    OracleResult<S> group;
    OracleResult<S> mp;
    OracleResult<S> core_ep;
    OracleResult<S> dual_core_ep;
};

template <typename S>
OracleSuite<S> oracle_suite(const Matrix<S>& A) {
    detail::require(A.rows() == A.cols(), "oracle_suite: matrix is not square");
    OracleSuite<S> out;
    out.index = index_of(A);
    out.drazin = detail::drazin_at(A, out.index);
    out.group = out.index <= 1 ? OracleResult<S>::found(out.drazin)
                               : OracleResult<S>::absent("index " + std::to_string(out.index) + " > 1");
    out.mp = moore_penrose_oracle(A);
    out.core_ep = detail::core_ep_at(A, out.index, out.drazin, false);
    out.dual_core_ep = detail::core_ep_at(A, out.index, out.drazin, true);
    return out;
}

}  // namespace starinv
