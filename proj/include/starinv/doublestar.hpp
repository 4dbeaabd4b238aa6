// Matrices of double star digraphs: construction, structural scalars, case
// classification and closed-form generalized inverses with their existence
// criteria.
//
// Vertex order throughout is (u, u_1..u_m, v, v_1..v_n):
//
//         [ 0  x^T  a  0  ]
//     M = [ y   0   0  0  ]
//         [ b   0   0  z^T]
//         [ 0   0   w  0  ]
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starinv/axioms.hpp"
#include "starinv/matrix.hpp"

namespace starinv {

template <typename S>
struct DoubleStarSpec {
    S a;
    S b;
    Vector<S> x;  // u -> u_i
    Vector<S> y;  // u_i -> u
    Vector<S> z;  // v -> v_j
    Vector<S> w;  // v_j -> v

    Index m() const { return x.size(); }
    Index n() const { return z.size(); }
    Index order() const { return m() + n() + 2; }
};

/// Human-readable list of violated invariants; empty when the spec is valid.
template <typename S>
std::vector<std::string> violations(const DoubleStarSpec<S>& spec) {
    std::vector<std::string> out;
    if (spec.m() < 1) out.emplace_back("m must be at least 1");
    if (spec.n() < 1) out.emplace_back("n must be at least 1");
    if (spec.y.size() != spec.m()) out.emplace_back("y must have length m");
    if (spec.w.size() != spec.n()) out.emplace_back("w must have length n");
    if (is_zero(spec.a)) out.emplace_back("a must be nonzero");
    if (is_zero(spec.b)) out.emplace_back("b must be nonzero");
    auto all_nonzero = [&out](const Vector<S>& vec, const char* name) {
        for (Index i = 0; i < vec.size(); ++i) {
            if (is_zero(vec(i))) {
                out.push_back(std::string(name) + "[" + std::to_string(i) + "] must be nonzero");
            }
        }
    };
    all_nonzero(spec.x, "x");
    all_nonzero(spec.y, "y");
    all_nonzero(spec.z, "z");
    all_nonzero(spec.w, "w");
    return out;
}

template <typename S>
void validate(const DoubleStarSpec<S>& spec) {
    auto bad = violations(spec);
    if (bad.empty()) return;
    std::string msg = "invalid double star spec:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw InvalidSpec(msg);
}

/// Diagonal blocks: center u, pendants of u, center v, pendants of v.
enum class Part { Cu, Pu, Cv, Pv };

template <typename S>
class BlockBuilder {
public:
    BlockBuilder(Index m, Index n) : m_(m), n_(n), M_(Matrix<S>::Zero(m + n + 2, m + n + 2)) {}

    void set(Part r, Part c, const Matrix<S>& block) {
        detail::require(block.rows() == size(r) && block.cols() == size(c), "block has the wrong shape");
        M_.block(offset(r), offset(c), size(r), size(c)) = block;
    }
    void set(Part r, Part c, const S& value) {
        detail::require(size(r) == 1 && size(c) == 1, "scalar block outside a center");
        M_(offset(r), offset(c)) = value;
    }

    Matrix<S> take() && { return std::move(M_); }

    Index offset(Part p) const {
        switch (p) {
            case Part::Cu: return 0;
            case Part::Pu: return 1;
            case Part::Cv: return m_ + 1;
            case Part::Pv: return m_ + 2;
        }
        return 0;
    }
    Index size(Part p) const {
        switch (p) {
            case Part::Cu:
            case Part::Cv: return 1;
            case Part::Pu: return m_;
            case Part::Pv: return n_;
        }
        return 0;
    }

private:
    Index m_;
    Index n_;
    Matrix<S> M_;
};

template <typename S>
Matrix<S> build(const DoubleStarSpec<S>& spec) {
    validate(spec);
    BlockBuilder<S> B(spec.m(), spec.n());
    B.set(Part::Cu, Part::Pu, Matrix<S>(spec.x.transpose()));
    B.set(Part::Cu, Part::Cv, spec.a);
    B.set(Part::Pu, Part::Cu, Matrix<S>(spec.y));
    B.set(Part::Cv, Part::Cu, spec.b);
    B.set(Part::Cv, Part::Pv, Matrix<S>(spec.z.transpose()));
    B.set(Part::Pv, Part::Cv, Matrix<S>(spec.w));
    return std::move(B).take();
}

template <typename S>
struct StructuralScalars {
    S s, t, u, v;   // x*x, z*z, y*y, w*w
    S r, h, p, q;   // a a' + v, b b' + u, b b' + t, a a' + s
    S zeta;         // x^T y + ab
    S beta, alpha;  // zeta zeta' + b b' v, zeta zeta' + a a' t
    S xty, ztw;
};

template <typename S>
StructuralScalars<S> scalars(const DoubleStarSpec<S>& spec) {
    auto gram = [](const Vector<S>& vec) {
        S acc(0);
        for (Index i = 0; i < vec.size(); ++i) acc += involve(vec(i)) * vec(i);
        return acc;
    };
    auto dot = [](const Vector<S>& l, const Vector<S>& r) {
        S acc(0);
        for (Index i = 0; i < l.size(); ++i) acc += l(i) * r(i);
        return acc;
    };
    StructuralScalars<S> k;
    k.s = gram(spec.x);
    k.t = gram(spec.z);
    k.u = gram(spec.y);
    k.v = gram(spec.w);
    const S aa = spec.a * involve(spec.a);
    const S bb = spec.b * involve(spec.b);
    k.r = aa + k.v;
    k.h = bb + k.u;
    k.p = bb + k.t;
    k.q = aa + k.s;
    k.xty = dot(spec.x, spec.y);
    k.ztw = dot(spec.z, spec.w);
    k.zeta = k.xty + spec.a * spec.b;
    const S zz = k.zeta * involve(k.zeta);
    k.beta = zz + bb * k.v;
    k.alpha = zz + aa * k.t;
    return k;
}

template <typename S>
struct MirroredSpec {
    DoubleStarSpec<S> spec;
    Permutation perm;  // perm_similar(build(original), perm) == build(spec)
};

/// Swaps the roles of the two stars.
template <typename S>
MirroredSpec<S> mirror(const DoubleStarSpec<S>& spec) {
    MirroredSpec<S> out{DoubleStarSpec<S>{spec.b, spec.a, spec.z, spec.w, spec.x, spec.y}, {}};
    const auto m = static_cast<std::size_t>(spec.m());
    const auto n = static_cast<std::size_t>(spec.n());
    std::vector<std::size_t> image;
    image.reserve(m + n + 2);
    for (std::size_t j = 0; j <= n; ++j) image.push_back(m + 1 + j);
    for (std::size_t i = 0; i <= m; ++i) image.push_back(i);
    out.perm = Permutation(std::move(image));
    return out;
}

enum class CaseKind { GroupInvertible, CaseI, CaseII, CaseIII };
enum class Orientation { Direct, Mirrored };

struct CaseLabel {
    CaseKind kind = CaseKind::GroupInvertible;
    Orientation orientation = Orientation::Direct;
    bool operator==(const CaseLabel&) const = default;
};

std::string to_string(CaseKind kind);
std::string to_string(Orientation orientation);
CaseKind parse_case_kind(std::string_view text);

template <typename S>
CaseLabel classify(const DoubleStarSpec<S>& spec) {
    const auto k = scalars(spec);
    const bool xy = !is_zero(k.xty);
    const bool zw = !is_zero(k.ztw);
    if (xy && zw) return {CaseKind::GroupInvertible, Orientation::Direct};
    if (!xy && !zw) return {CaseKind::CaseI, Orientation::Direct};
    if (xy) return {is_zero(k.zeta) ? CaseKind::CaseIII : CaseKind::CaseII, Orientation::Direct};
    const auto mk = scalars(mirror(spec).spec);
    return {is_zero(mk.zeta) ? CaseKind::CaseIII : CaseKind::CaseII, Orientation::Mirrored};
}

enum class InverseKind { Drazin, Group, MoorePenrose, Core, DualCore, CoreEP, DualCoreEP, MPCEP, CEPMP, GDC, GC };

inline constexpr InverseKind kAllInverseKinds[] = {
    InverseKind::Drazin, InverseKind::Group,  InverseKind::MoorePenrose, InverseKind::Core,
    InverseKind::DualCore, InverseKind::CoreEP, InverseKind::DualCoreEP, InverseKind::MPCEP,
    InverseKind::CEPMP, InverseKind::GDC, InverseKind::GC};

std::string to_string(InverseKind kind);
InverseKind parse_inverse_kind(std::string_view text);

template <typename S>
struct Criterion {
    std::string name;
    S value;
    bool required_nonzero = true;
};

template <typename S>
struct InverseReport {
    InverseKind kind = InverseKind::Drazin;
    bool exists = false;
    std::optional<Matrix<S>> value;
    std::vector<Criterion<S>> criteria;
    CaseLabel case_label;
};

namespace detail {

// Vector pieces of a spec as dense matrices, with their transposes and conjugates.
template <typename S>
struct Pieces {
    explicit Pieces(const DoubleStarSpec<S>& spec)
        : a(spec.a), b(spec.b), abar(involve(spec.a)), bbar(involve(spec.b)),
          x(spec.x), y(spec.y), z(spec.z), w(spec.w),
          xT(x.transpose()), zT(z.transpose()),
          xbar(conj(x)), ybar(conj(y)), zbar(conj(z)), wbar(conj(w)),
          ystar(star(y)), wstar(star(w)),
          k(scalars(spec)), zbar_(involve(k.zeta)), m(spec.m()), n(spec.n()) {}

    S a, b, abar, bbar;
    Matrix<S> x, y, z, w;
    Matrix<S> xT, zT;
    Matrix<S> xbar, ybar, zbar, wbar;
    Matrix<S> ystar, wstar;
    StructuralScalars<S> k;
    S zbar_;  // conjugate of zeta
    Index m, n;

    BlockBuilder<S> blocks() const { return BlockBuilder<S>(m, n); }
};

template <typename S>
S inv(const S& s) {
    return inverse(s);
}

template <typename S>
Matrix<S> group_formula(const Pieces<S>& P) {
    const S& c = P.k.xty;
    const S& d = P.k.ztw;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(inv(c) * P.xT));
    B.set(Part::Pu, Part::Cu, Matrix<S>(inv(c) * P.y));
    B.set(Part::Pu, Part::Pv, Matrix<S>(-P.a * inv(S(c * d)) * (P.y * P.zT)));
    B.set(Part::Cv, Part::Pv, Matrix<S>(inv(d) * P.zT));
    B.set(Part::Pv, Part::Pu, Matrix<S>(-P.b * inv(S(c * d)) * (P.w * P.xT)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(inv(d) * P.w));
    return std::move(B).take();
}

template <typename S>
Matrix<S> drazin_case1(const Pieces<S>& P) {
    const S k = inv(S(P.a * P.b));
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(k * P.xT));
    B.set(Part::Cu, Part::Cv, S(k * P.a));
    B.set(Part::Pu, Part::Cu, Matrix<S>(k * P.y));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(k * inv(P.b)) * (P.y * P.zT)));
    B.set(Part::Cv, Part::Cu, S(k * P.b));
    B.set(Part::Cv, Part::Pv, Matrix<S>(k * P.zT));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(k * inv(P.a)) * (P.w * P.xT)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(k * P.w));
    return std::move(B).take();
}

template <typename S>
Matrix<S> drazin_case2(const Pieces<S>& P) {
    const S g = inv(P.k.zeta);
    const S g2 = g * g;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(g * P.xT));
    B.set(Part::Cu, Part::Cv, S(g * P.a));
    B.set(Part::Pu, Part::Cu, Matrix<S>(g * P.y));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(g2 * P.a) * (P.y * P.zT)));
    B.set(Part::Cv, Part::Cu, S(g * P.b));
    B.set(Part::Cv, Part::Pv, Matrix<S>(S(g2 * P.a * P.b) * P.zT));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(g2 * P.b) * (P.w * P.xT)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(S(g2 * P.a * P.b) * P.w));
    return std::move(B).take();
}

template <typename S>
Matrix<S> mp_formula(const Pieces<S>& P) {
    const auto& k = P.k;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(inv(k.u) * P.ystar));
    B.set(Part::Pu, Part::Cu, Matrix<S>(inv(k.s) * P.xbar));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(-inv(k.s) * P.a * inv(k.v)) * (P.xbar * P.wstar)));
    B.set(Part::Cv, Part::Pv, Matrix<S>(inv(k.v) * P.wstar));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(-inv(k.t) * P.b * inv(k.u)) * (P.zbar * P.ystar)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(inv(k.t) * P.zbar));
    return std::move(B).take();
}

template <typename S>
Matrix<S> core_formula(const Pieces<S>& P) {
    const auto& k = P.k;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(inv(k.u) * P.ystar));
    B.set(Part::Pu, Part::Cu, Matrix<S>(inv(k.xty) * P.y));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(-P.a * inv(k.v) * inv(k.xty)) * (P.y * P.wstar)));
    B.set(Part::Cv, Part::Pv, Matrix<S>(inv(k.v) * P.wstar));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(-P.b * inv(k.u) * inv(k.ztw)) * (P.w * P.ystar)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(inv(k.ztw) * P.w));
    return std::move(B).take();
}

template <typename S>
Matrix<S> dual_core_formula(const Pieces<S>& P) {
    const auto& k = P.k;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(inv(k.xty) * P.xT));
    B.set(Part::Pu, Part::Cu, Matrix<S>(inv(k.s) * P.xbar));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(-P.a * inv(k.s) * inv(k.ztw)) * (P.xbar * P.zT)));
    B.set(Part::Cv, Part::Pv, Matrix<S>(inv(k.ztw) * P.zT));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(-P.b * inv(k.t) * inv(k.xty)) * (P.zbar * P.xT)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(inv(k.t) * P.zbar));
    return std::move(B).take();
}

template <typename S>
Matrix<S> core_ep_case1(const Pieces<S>& P) {
    const auto& k = P.k;
    const S ih = inv(k.h), ir = inv(k.r);
    const S ibr = inv(S(P.b * k.r)), iah = inv(S(P.a * k.h));
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(ih * P.ystar));
    B.set(Part::Cu, Part::Cv, S(P.bbar * ih));
    B.set(Part::Pu, Part::Cu, Matrix<S>(S(P.abar * ibr) * P.y));
    B.set(Part::Pu, Part::Pv, Matrix<S>(ibr * (P.y * P.wstar)));
    B.set(Part::Cv, Part::Cu, S(P.abar * ir));
    B.set(Part::Cv, Part::Pv, Matrix<S>(ir * P.wstar));
    B.set(Part::Pv, Part::Pu, Matrix<S>(iah * (P.w * P.ystar)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(S(P.bbar * iah) * P.w));
    return std::move(B).take();
}

template <typename S>
Matrix<S> dual_core_ep_case1(const Pieces<S>& P) {
    const auto& k = P.k;
    const S ip = inv(k.p), iq = inv(k.q);
    const S iap = inv(S(P.a * k.p)), ibq = inv(S(P.b * k.q));
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(S(P.bbar * iap) * P.xT));
    B.set(Part::Cu, Part::Cv, S(P.bbar * ip));
    B.set(Part::Pu, Part::Cu, Matrix<S>(iq * P.xbar));
    B.set(Part::Pu, Part::Pv, Matrix<S>(ibq * (P.xbar * P.zT)));
    B.set(Part::Cv, Part::Cu, S(P.abar * iq));
    B.set(Part::Cv, Part::Pv, Matrix<S>(S(P.abar * ibq) * P.zT));
    B.set(Part::Pv, Part::Pu, Matrix<S>(iap * (P.zbar * P.xT)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(ip * P.zbar));
    return std::move(B).take();
}

template <typename S>
Matrix<S> core_ep_case2(const Pieces<S>& P) {
    const auto& k = P.k;
    const S ih = inv(k.h), ibeta = inv(k.beta), iz = inv(k.zeta);
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(ih * P.ystar));
    B.set(Part::Cu, Part::Cv, S(ih * P.bbar));
    B.set(Part::Pu, Part::Cu, Matrix<S>(S(ibeta * P.zbar_) * P.y));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(ibeta * P.bbar) * (P.y * P.wstar)));
    B.set(Part::Cv, Part::Cu, S(ibeta * P.zbar_ * P.b));
    B.set(Part::Cv, Part::Pv, Matrix<S>(S(ibeta * P.b * P.bbar) * P.wstar));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(P.b * ih * iz) * (P.w * P.ystar)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(S(P.b * P.bbar * ih * iz) * P.w));
    return std::move(B).take();
}

template <typename S>
Matrix<S> dual_core_ep_case2(const Pieces<S>& P) {
    const auto& k = P.k;
    const S ialpha = inv(k.alpha), iq = inv(k.q), iqz = inv(S(k.q * k.zeta));
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(S(P.zbar_ * ialpha) * P.xT));
    B.set(Part::Cu, Part::Cv, S(P.zbar_ * ialpha * P.a));
    B.set(Part::Pu, Part::Cu, Matrix<S>(iq * P.xbar));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(iqz * P.a) * (P.xbar * P.zT)));
    B.set(Part::Cv, Part::Cu, S(P.abar * iq));
    B.set(Part::Cv, Part::Pv, Matrix<S>(S(iqz * P.a * P.abar) * P.zT));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(P.abar * ialpha) * (P.zbar * P.xT)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(S(P.a * P.abar * ialpha) * P.zbar));
    return std::move(B).take();
}

template <typename S>
Matrix<S> mpcep_case1(const Pieces<S>& P) {
    const auto& k = P.k;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(inv(k.h) * P.ystar));
    B.set(Part::Cu, Part::Cv, S(P.bbar * inv(k.h)));
    B.set(Part::Cv, Part::Cu, S(P.abar * inv(k.r)));
    B.set(Part::Cv, Part::Pv, Matrix<S>(inv(k.r) * P.wstar));
    return std::move(B).take();
}

template <typename S>
Matrix<S> mpcep_case2(const Pieces<S>& P) {
    const auto& k = P.k;
    const S isb = inv(S(k.s * k.beta));
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(inv(k.h) * P.ystar));
    B.set(Part::Cu, Part::Cv, S(P.bbar * inv(k.h)));
    B.set(Part::Pu, Part::Cu, Matrix<S>(S(isb * P.zbar_ * k.xty) * P.xbar));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(isb * P.bbar * k.xty) * (P.xbar * P.wstar)));
    B.set(Part::Cv, Part::Cu, S(inv(k.beta) * P.zbar_ * P.b));
    B.set(Part::Cv, Part::Pv, Matrix<S>(S(inv(k.beta) * P.b * P.bbar) * P.wstar));
    return std::move(B).take();
}

template <typename S>
Matrix<S> cepmp_case1(const Pieces<S>& P) {
    const auto& k = P.k;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Cv, S(P.bbar * inv(k.p)));
    B.set(Part::Pu, Part::Cu, Matrix<S>(inv(k.q) * P.xbar));
    B.set(Part::Cv, Part::Cu, S(P.abar * inv(k.q)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(inv(k.p) * P.zbar));
    return std::move(B).take();
}

template <typename S>
Matrix<S> cepmp_case2(const Pieces<S>& P) {
    const auto& k = P.k;
    const S iua = inv(S(k.u * k.alpha));
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(S(P.zbar_ * iua * k.xty) * P.ystar));
    B.set(Part::Cu, Part::Cv, S(P.a * P.zbar_ * inv(k.alpha)));
    B.set(Part::Pu, Part::Cu, Matrix<S>(inv(k.q) * P.xbar));
    B.set(Part::Cv, Part::Cu, S(P.abar * inv(k.q)));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(P.abar * iua * k.xty) * (P.zbar * P.ystar)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(S(P.a * P.abar * inv(k.alpha)) * P.zbar));
    return std::move(B).take();
}

template <typename S>
Matrix<S> gdc_case1(const Pieces<S>& P) {
    const auto& k = P.k;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(S(P.abar * inv(S(P.b * k.r))) * P.xT));
    B.set(Part::Cu, Part::Cv, inv(P.b));
    B.set(Part::Cv, Part::Cu, inv(P.a));
    B.set(Part::Cv, Part::Pv, Matrix<S>(S(P.bbar * inv(S(P.a * k.h))) * P.zT));
    return std::move(B).take();
}

template <typename S>
Matrix<S> gdc_case2(const Pieces<S>& P) {
    const auto& k = P.k;
    const S iz = inv(k.zeta);
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(S(inv(k.beta) * P.zbar_) * P.xT));
    B.set(Part::Cu, Part::Cv, S(inv(k.beta) * (P.a * P.zbar_ + P.bbar * k.v)));
    B.set(Part::Pu, Part::Cu, Matrix<S>(S(inv(S(k.s * k.zeta)) * k.xty) * P.xbar));
    B.set(Part::Pu, Part::Pv, Matrix<S>(S(P.bbar * inv(S(k.h * k.s * k.zeta)) * k.xty) * (P.xbar * P.zT)));
    B.set(Part::Cv, Part::Cu, S(P.b * iz));
    B.set(Part::Cv, Part::Pv, Matrix<S>(S(P.b * P.bbar * inv(S(k.h * k.zeta))) * P.zT));
    return std::move(B).take();
}

template <typename S>
Matrix<S> gc_case1(const Pieces<S>& P) {
    const auto& k = P.k;
    auto B = P.blocks();
    B.set(Part::Cu, Part::Cv, inv(P.b));
    B.set(Part::Pu, Part::Cu, Matrix<S>(S(P.bbar * inv(S(P.a * k.p))) * P.y));
    B.set(Part::Cv, Part::Cu, inv(P.a));
    B.set(Part::Pv, Part::Cv, Matrix<S>(S(P.abar * inv(S(P.b * k.q))) * P.w));
    return std::move(B).take();
}

template <typename S>
Matrix<S> gc_case2(const Pieces<S>& P) {
    const auto& k = P.k;
    const S iz = inv(k.zeta);
    auto B = P.blocks();
    B.set(Part::Cu, Part::Pu, Matrix<S>(S(inv(S(k.u * k.zeta)) * k.xty) * P.ystar));
    B.set(Part::Cu, Part::Cv, S(P.a * iz));
    B.set(Part::Pu, Part::Cu, Matrix<S>(S(inv(k.alpha) * P.zbar_) * P.y));
    B.set(Part::Cv, Part::Cu, S(inv(k.alpha) * (P.b * P.zbar_ + P.abar * k.t)));
    B.set(Part::Pv, Part::Pu, Matrix<S>(S(P.abar * inv(S(k.u * k.q * k.zeta)) * k.xty) * (P.w * P.ystar)));
    B.set(Part::Pv, Part::Cv, Matrix<S>(S(P.a * P.abar * inv(S(k.q * k.zeta))) * P.w));
    return std::move(B).take();
}

template <typename S>
std::vector<Criterion<S>> required(const StructuralScalars<S>& k, std::string_view names) {
    std::vector<Criterion<S>> out;
    std::size_t pos = 0;
    while (pos < names.size()) {
        std::size_t end = names.find(',', pos);
        if (end == std::string_view::npos) end = names.size();
        const std::string name(names.substr(pos, end - pos));
        const S* value = nullptr;
        if (name == "s") value = &k.s;
        else if (name == "t") value = &k.t;
        else if (name == "u") value = &k.u;
        else if (name == "v") value = &k.v;
        else if (name == "r") value = &k.r;
        else if (name == "h") value = &k.h;
        else if (name == "p") value = &k.p;
        else if (name == "q") value = &k.q;
        else if (name == "zeta") value = &k.zeta;
        else if (name == "beta") value = &k.beta;
        else if (name == "alpha") value = &k.alpha;
        else if (name == "xty") value = &k.xty;
        else if (name == "ztw") value = &k.ztw;
        else throw InternalError("unknown criterion " + name);
        out.push_back({name, *value, true});
        pos = end + 1;
    }
    return out;
}

/// Criterion names for each inverse kind and case, in reporting order.
inline std::string_view criterion_names(InverseKind kind, CaseKind c) {
    using K = InverseKind;
    const bool gi = c == CaseKind::GroupInvertible;
    const bool one = c == CaseKind::CaseI;
    const bool two = c == CaseKind::CaseII;
    switch (kind) {
        case K::Drazin: return "";
        case K::Group: return "xty,ztw";
        case K::MoorePenrose: return "s,u,t,v";
        case K::Core:
        case K::DualCore: return "xty,ztw,s,u,t,v";
        case K::CoreEP: return gi ? "xty,ztw,u,v" : one ? "r,h" : two ? "h,beta" : "";
        case K::DualCoreEP: return gi ? "xty,ztw,s,t" : one ? "p,q" : two ? "q,alpha" : "";
        case K::MPCEP:
        case K::GDC: return gi ? "s,u,t,v,xty,ztw" : one ? "s,u,t,v,r,h" : two ? "s,u,t,v,h,beta" : "s,u,t,v";
        case K::CEPMP:
        case K::GC: return gi ? "s,u,t,v,xty,ztw" : one ? "s,u,t,v,p,q" : two ? "s,u,t,v,q,alpha" : "s,u,t,v";
    }
    return "";
}

template <typename S>
Matrix<S> evaluate_formula(InverseKind kind, CaseKind c, const Pieces<S>& P, const Matrix<S>& M) {
    using K = InverseKind;
    const Index N = M.rows();
    if (c == CaseKind::CaseIII && kind != K::MoorePenrose && kind != K::Group && kind != K::Core && kind != K::DualCore) {
        return Matrix<S>::Zero(N, N);
    }
    const bool gi = c == CaseKind::GroupInvertible;
    const bool one = c == CaseKind::CaseI;
    switch (kind) {
        case K::Drazin: return gi ? group_formula(P) : one ? drazin_case1(P) : drazin_case2(P);
        case K::Group: return group_formula(P);
        case K::MoorePenrose: return mp_formula(P);
        case K::Core: return core_formula(P);
        case K::DualCore: return dual_core_formula(P);
        // With index at most one the (dual) core EP inverse is the (dual) core inverse.
        case K::CoreEP: return gi ? core_formula(P) : one ? core_ep_case1(P) : core_ep_case2(P);
        case K::DualCoreEP: return gi ? dual_core_formula(P) : one ? dual_core_ep_case1(P) : dual_core_ep_case2(P);
        case K::MPCEP: return gi ? Matrix<S>(mp_formula(P) * M * core_formula(P)) : one ? mpcep_case1(P) : mpcep_case2(P);
        case K::CEPMP: return gi ? Matrix<S>(dual_core_formula(P) * M * mp_formula(P)) : one ? cepmp_case1(P) : cepmp_case2(P);
        case K::GDC: return gi ? Matrix<S>(mp_formula(P) * core_formula(P) * M) : one ? gdc_case1(P) : gdc_case2(P);
        case K::GC: return gi ? Matrix<S>(M * dual_core_formula(P) * mp_formula(P)) : one ? gc_case1(P) : gc_case2(P);
    }
    throw InternalError("unhandled inverse kind");
}

}  // namespace detail

/// Closed-form evaluation of one inverse kind. Specs with x^T y = 0 != z^T w
/// are evaluated on the mirrored spec and conjugated back.
template <typename S>
InverseReport<S> closed_form(const DoubleStarSpec<S>& spec, InverseKind kind) {
    validate(spec);
    InverseReport<S> report;
    report.kind = kind;
    report.case_label = classify(spec);
    const bool mirrored = report.case_label.orientation == Orientation::Mirrored;
    const auto mirror_data = mirrored ? std::optional<MirroredSpec<S>>(mirror(spec)) : std::nullopt;
    const DoubleStarSpec<S>& oriented = mirrored ? mirror_data->spec : spec;

    const detail::Pieces<S> pieces(oriented);
    const CaseKind c = report.case_label.kind;
    report.criteria = detail::required(pieces.k, detail::criterion_names(kind, c));
    if (kind == InverseKind::Drazin) {
        report.criteria = {{"xty", pieces.k.xty, false}, {"ztw", pieces.k.ztw, false}, {"zeta", pieces.k.zeta, false}};
    }
    report.exists = std::all_of(report.criteria.begin(), report.criteria.end(),
                                [](const Criterion<S>& cr) { return !cr.required_nonzero || !is_zero(cr.value); });
    if (!report.exists) return report;

    Matrix<S> value = detail::evaluate_formula(kind, c, pieces, build(oriented));
    if (mirrored) value = perm_unsimilar(value, mirror_data->perm);
    report.value = std::move(value);
    return report;
}

template <typename S>
InverseReport<S> drazin_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::Drazin); }
template <typename S>
InverseReport<S> group_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::Group); }
template <typename S>
InverseReport<S> mp_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::MoorePenrose); }
template <typename S>
InverseReport<S> core_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::Core); }
template <typename S>
InverseReport<S> dual_core_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::DualCore); }
template <typename S>
InverseReport<S> core_ep_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::CoreEP); }
template <typename S>
InverseReport<S> dual_core_ep_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::DualCoreEP); }
template <typename S>
InverseReport<S> mpcep_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::MPCEP); }
template <typename S>
InverseReport<S> cepmp_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::CEPMP); }
template <typename S>
InverseReport<S> gdc_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::GDC); }
template <typename S>
InverseReport<S> gc_cf(const DoubleStarSpec<S>& spec) { return closed_form(spec, InverseKind::GC); }

template <typename S>
struct Projectors {
    Matrix<S> mp_m;  // M^dag M
    Matrix<S> m_mp;  // M M^dag
};

/// The orthogonal projectors M^dag M and M M^dag, both block diagonal.
template <typename S>
Projectors<S> projectors(const DoubleStarSpec<S>& spec) {
    validate(spec);
    const detail::Pieces<S> P(spec);
    const auto& k = P.k;
    if (is_zero(k.s) || is_zero(k.u) || is_zero(k.t) || is_zero(k.v)) {
        throw NotMoorePenroseInvertible("projectors need s, u, t, v all nonzero");
    }
    auto left = P.blocks();
    left.set(Part::Cu, Part::Cu, S(1));
    left.set(Part::Pu, Part::Pu, Matrix<S>(detail::inv(k.s) * (P.xbar * P.xT)));
    left.set(Part::Cv, Part::Cv, S(1));
    left.set(Part::Pv, Part::Pv, Matrix<S>(detail::inv(k.t) * (P.zbar * P.zT)));
    auto right = P.blocks();
    right.set(Part::Cu, Part::Cu, S(1));
    right.set(Part::Pu, Part::Pu, Matrix<S>(detail::inv(k.u) * (P.y * P.ystar)));
    right.set(Part::Cv, Part::Cv, S(1));
    right.set(Part::Pv, Part::Pv, Matrix<S>(detail::inv(k.v) * (P.w * P.wstar)));
    return {std::move(left).take(), std::move(right).take()};
}

/// Rows of the existence summary for the non-group-invertible, nonzero-Drazin cases.
inline constexpr InverseKind kTableKinds[] = {InverseKind::MoorePenrose, InverseKind::CoreEP, InverseKind::DualCoreEP,
                                              InverseKind::MPCEP,        InverseKind::CEPMP,  InverseKind::GDC,
                                              InverseKind::GC};

template <typename S>
std::vector<InverseReport<S>> existence_table(const DoubleStarSpec<S>& spec) {
    const CaseLabel label = classify(spec);
    if (label.kind != CaseKind::CaseI && label.kind != CaseKind::CaseII) {
        throw OutOfTableScope("existence table covers Case I and Case II only (got " + to_string(label.kind) + ")");
    }
    std::vector<InverseReport<S>> rows;
    for (InverseKind kind : kTableKinds) rows.push_back(closed_form(spec, kind));
    return rows;
}

}  // namespace starinv
