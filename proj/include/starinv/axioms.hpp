// Exact checkers for the defining equation systems of each generalized inverse.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "starinv/matrix.hpp"

namespace starinv {

struct AxiomFailure {
    std::string equation;
    Index row = 0;  // first differing entry
    Index col = 0;
};

struct AxiomVerdict {
    std::string system;
    bool satisfied = true;
    std::vector<AxiomFailure> failures;
};

/// Bit flags selecting Penrose equations (1)-(4).
enum PenroseEquations : unsigned {
    kPenrose1 = 1U,
    kPenrose2 = 2U,
    kPenrose3 = 4U,
    kPenrose4 = 8U,
    kPenroseAll = 15U,
};

enum class CompositeKind { MPCEP, CEPMP, GDC, GC };

inline std::string to_string(CompositeKind kind) {
    switch (kind) {
        case CompositeKind::MPCEP: return "MPCEP";
        case CompositeKind::CEPMP: return "CEPMP";
        case CompositeKind::GDC: return "GDC";
        case CompositeKind::GC: return "GC";
    }
    return "?";
}

namespace detail {

template <typename S>
void expect_equal(AxiomVerdict& verdict, const char* label, const Matrix<S>& lhs, const Matrix<S>& rhs) {
    if (auto diff = first_difference(lhs, rhs)) {
        verdict.satisfied = false;
        verdict.failures.push_back({label, diff->first, diff->second});
    }
}

template <typename S>
void require_square_pair(const Matrix<S>& A, const Matrix<S>& X) {
    require(A.rows() == A.cols(), "axiom check: A is not square");
    require(X.rows() == A.rows() && X.cols() == A.cols(), "axiom check: X has the wrong shape");
}

}  // namespace detail

template <typename S>
AxiomVerdict check_penrose(const Matrix<S>& A, const Matrix<S>& X, unsigned subset = kPenroseAll) {
    detail::require(X.rows() == A.cols() && X.cols() == A.rows(), "check_penrose: X must have the transposed shape of A");
    AxiomVerdict v{"penrose", true, {}};
    const Matrix<S> AX = A * X;
    const Matrix<S> XA = X * A;
    if (subset & kPenrose1) detail::expect_equal<S>(v, "(1) AXA=A", AX * A, A);
    if (subset & kPenrose2) detail::expect_equal<S>(v, "(2) XAX=X", XA * X, X);
    if (subset & kPenrose3) detail::expect_equal<S>(v, "(3) (AX)*=AX", star(AX), AX);
    if (subset & kPenrose4) detail::expect_equal<S>(v, "(4) (XA)*=XA", star(XA), XA);
    return v;
}

/// A^{k+1} X = A^k, X A X = X, A X = X A.
template <typename S>
AxiomVerdict check_drazin(const Matrix<S>& A, const Matrix<S>& X, std::size_t k) {
    detail::require_square_pair(A, X);
    AxiomVerdict v{"drazin", true, {}};
    const Matrix<S> Ak = mat_pow(A, k);
    detail::expect_equal<S>(v, "A^{k+1}X=A^k", Matrix<S>(Ak * A * X), Ak);
    detail::expect_equal<S>(v, "XAX=X", Matrix<S>(X * A * X), X);
    detail::expect_equal<S>(v, "AX=XA", Matrix<S>(A * X), Matrix<S>(X * A));
    return v;
}

/// Core EP: X A^{m+1} = A^m, A X^2 = X, (AX)* = AX.
/// Dual:    A^{m+1} X = A^m, X^2 A = X, (XA)* = XA.
template <typename S>
AxiomVerdict check_core_ep(const Matrix<S>& A, const Matrix<S>& X, std::size_t m, bool dual) {
    detail::require_square_pair(A, X);
    AxiomVerdict v{dual ? "dual core EP" : "core EP", true, {}};
    const Matrix<S> Am = mat_pow(A, m);
    const Matrix<S> Am1 = Am * A;
    if (!dual) {
        const Matrix<S> AX = A * X;
        detail::expect_equal<S>(v, "(i) XA^{m+1}=A^m", Matrix<S>(X * Am1), Am);
        detail::expect_equal<S>(v, "(ii) AX^2=X", Matrix<S>(AX * X), X);
        detail::expect_equal<S>(v, "(iii) (AX)*=AX", star(AX), AX);
    } else {
        const Matrix<S> XA = X * A;
        detail::expect_equal<S>(v, "(i') A^{m+1}X=A^m", Matrix<S>(Am1 * X), Am);
        detail::expect_equal<S>(v, "(ii') X^2A=X", Matrix<S>(X * XA), X);
        detail::expect_equal<S>(v, "(iii') (XA)*=XA", star(XA), XA);
    }
    return v;
}

/// Constituents a composite system refers to. `core_ep` is the core EP
/// inverse for MPCEP/GDC and the dual core EP inverse for CEPMP/GC.
template <typename S>
struct CompositeAux {
    Matrix<S> mp;
    Matrix<S> core_ep;
};

template <typename S>
AxiomVerdict check_composite(const Matrix<S>& A, const Matrix<S>& X, CompositeKind kind, const CompositeAux<S>& aux) {
    detail::require_square_pair(A, X);
    detail::require_square_pair(A, aux.mp);
    detail::require_square_pair(A, aux.core_ep);
    AxiomVerdict v{to_string(kind), true, {}};
    const Matrix<S>& Ad = aux.mp;
    const Matrix<S>& C = aux.core_ep;
    const Matrix<S> AX = A * X;
    const Matrix<S> XA = X * A;
    detail::expect_equal<S>(v, "XAX=X", Matrix<S>(XA * X), X);
    switch (kind) {
        case CompositeKind::MPCEP:
            detail::expect_equal<S>(v, "AX=AA^cep", AX, Matrix<S>(A * C));
            detail::expect_equal<S>(v, "XA=A^dag A A^cep A", XA, Matrix<S>(Ad * A * C * A));
            break;
        case CompositeKind::CEPMP:
            detail::expect_equal<S>(v, "AX=A A_cep A A^dag", AX, Matrix<S>(A * C * A * Ad));
            detail::expect_equal<S>(v, "XA=A_cep A", XA, Matrix<S>(C * A));
            break;
        case CompositeKind::GDC:
            detail::expect_equal<S>(v, "AX=A^cep A", AX, Matrix<S>(C * A));
            detail::expect_equal<S>(v, "XA=A^dag A^cep A^2", XA, Matrix<S>(Ad * C * A * A));
            break;
        case CompositeKind::GC:
            detail::expect_equal<S>(v, "AX=A^2 A_cep A^dag", AX, Matrix<S>(A * A * C * Ad));
            detail::expect_equal<S>(v, "XA=A A_cep", XA, Matrix<S>(A * C));
            break;
    }
    return v;
}

}  // namespace starinv
