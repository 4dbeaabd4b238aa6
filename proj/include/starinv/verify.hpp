// Cross-checks every closed form against its defining equations and against
// the formula-free oracle.
#pragma once

#include <string>
#include <vector>

#include "starinv/axioms.hpp"
#include "starinv/doublestar.hpp"
#include "starinv/oracle.hpp"

namespace starinv {

enum class Verdict { Pass, Fail, NotApplicable };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotApplicable: return "N-A";
    }
    return "?";
}

struct VerifyRow {
    InverseKind kind = InverseKind::Drazin;
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;
};

namespace detail {

inline std::string describe(const AxiomVerdict& v) {
    std::string out = v.system + " equations fail:";
    for (const auto& f : v.failures) out += " " + f.equation;
    return out;
}

template <typename S>
VerifyRow verify_kind(const DoubleStarSpec<S>& spec, const Matrix<S>& M, const OracleSuite<S>& o, InverseKind kind) {
    VerifyRow row{kind, Verdict::Pass, {}};
    const auto cf = closed_form(spec, kind);

    OracleResult<S> oracle;
    AxiomVerdict axioms{"none", true, {}};
    switch (kind) {
        case InverseKind::Drazin: oracle = OracleResult<S>::found(o.drazin); break;
        case InverseKind::Group: oracle = o.group; break;
        case InverseKind::MoorePenrose: oracle = o.mp; break;
        case InverseKind::Core:
        case InverseKind::DualCore:
            if (!o.group.exists) oracle = OracleResult<S>::absent("no group inverse");
            else if (!o.mp.exists) oracle = OracleResult<S>::absent("no Moore-Penrose inverse");
            else if (kind == InverseKind::Core) oracle = OracleResult<S>::found(*o.group.value * M * *o.mp.value);
            else oracle = OracleResult<S>::found(*o.mp.value * M * *o.group.value);
            break;
        case InverseKind::CoreEP: oracle = o.core_ep; break;
        case InverseKind::DualCoreEP: oracle = o.dual_core_ep; break;
        case InverseKind::MPCEP: oracle = composite_from(M, CompositeKind::MPCEP, o.mp, o.core_ep); break;
        case InverseKind::CEPMP: oracle = composite_from(M, CompositeKind::CEPMP, o.mp, o.dual_core_ep); break;
        case InverseKind::GDC: oracle = composite_from(M, CompositeKind::GDC, o.mp, o.core_ep); break;
        case InverseKind::GC: oracle = composite_from(M, CompositeKind::GC, o.mp, o.dual_core_ep); break;
    }

    if (cf.exists != oracle.exists) {
        return {kind, Verdict::Fail,
                std::string("existence disagrees: closed form says ") + (cf.exists ? "exists" : "absent") +
                    ", oracle says " + (oracle.exists ? "exists" : "absent (" + oracle.witness + ")")};
    }
    if (!cf.exists) return {kind, Verdict::NotApplicable, "absent: " + oracle.witness};

    const Matrix<S>& X = *cf.value;
    if (auto diff = first_difference(X, *oracle.value)) {
        return {kind, Verdict::Fail,
                "value differs from oracle at (" + std::to_string(diff->first) + "," + std::to_string(diff->second) + ")"};
    }
    const std::size_t index = o.index;
    const std::size_t m1 = index == 0 ? 1 : index;
    switch (kind) {
        case InverseKind::Drazin: axioms = check_drazin(M, X, index); break;
        case InverseKind::Group: axioms = check_drazin(M, X, 1); break;
        case InverseKind::MoorePenrose: axioms = check_penrose(M, X); break;
        case InverseKind::Core: axioms = check_core_ep(M, X, 1, false); break;
        case InverseKind::DualCore: axioms = check_core_ep(M, X, 1, true); break;
        case InverseKind::CoreEP: axioms = check_core_ep(M, X, m1, false); break;
        case InverseKind::DualCoreEP: axioms = check_core_ep(M, X, m1, true); break;
        case InverseKind::MPCEP:
        case InverseKind::GDC:
            axioms = check_composite(M, X, kind == InverseKind::MPCEP ? CompositeKind::MPCEP : CompositeKind::GDC,
                                     CompositeAux<S>{*o.mp.value, *o.core_ep.value});
            break;
        case InverseKind::CEPMP:
        case InverseKind::GC:
            axioms = check_composite(M, X, kind == InverseKind::CEPMP ? CompositeKind::CEPMP : CompositeKind::GC,
                                     CompositeAux<S>{*o.mp.value, *o.dual_core_ep.value});
            break;
    }
    if (!axioms.satisfied) return {kind, Verdict::Fail, describe(axioms)};
    return row;
}

}  // namespace detail

template <typename S>
std::vector<VerifyRow> verify_all(const DoubleStarSpec<S>& spec) {
    const Matrix<S> M = build(spec);
    std::vector<VerifyRow> rows;
    OracleSuite<S> suite;
    try {
        suite = oracle_suite(M);
    } catch (const InternalError& e) {
        for (InverseKind kind : kAllInverseKinds) rows.push_back({kind, Verdict::Fail, e.what()});
        return rows;
    }
    for (InverseKind kind : kAllInverseKinds) {
        try {
            rows.push_back(detail::verify_kind(spec, M, suite, kind));
        } catch (const InternalError& e) {
            rows.push_back({kind, Verdict::Fail, e.what()});
        }
    }
    return rows;
}

}  // namespace starinv
