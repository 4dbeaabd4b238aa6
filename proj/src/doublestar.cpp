#include "starinv/doublestar.hpp"

#include <array>
#include <utility>

namespace starinv {

namespace {

constexpr std::array<std::pair<CaseKind, std::string_view>, 4> kCaseNames{{
    {CaseKind::GroupInvertible, "GroupInvertible"},
    {CaseKind::CaseI, "CaseI"},
    {CaseKind::CaseII, "CaseII"},
    {CaseKind::CaseIII, "CaseIII"},
}};

constexpr std::array<std::pair<InverseKind, std::string_view>, 11> kInverseNames{{
    {InverseKind::Drazin, "Drazin"},
    {InverseKind::Group, "Group"},
    {InverseKind::MoorePenrose, "MoorePenrose"},
    {InverseKind::Core, "Core"},
    {InverseKind::DualCore, "DualCore"},
    {InverseKind::CoreEP, "CoreEP"},
    {InverseKind::DualCoreEP, "DualCoreEP"},
    {InverseKind::MPCEP, "MPCEP"},
    {InverseKind::CEPMP, "CEPMP"},
    {InverseKind::GDC, "GDC"},
    {InverseKind::GC, "GC"},
}};

}  // namespace

std::string to_string(CaseKind kind) {
    for (const auto& [k, name] : kCaseNames)
        if (k == kind) return std::string(name);
    return "?";
}

std::string to_string(Orientation orientation) {
    return orientation == Orientation::Direct ? "Direct" : "Mirrored";
}

CaseKind parse_case_kind(std::string_view text) {
    for (const auto& [k, name] : kCaseNames)
        if (name == text) return k;
    throw InvalidArgument("unknown case '" + std::string(text) + "' (expected GroupInvertible, CaseI, CaseII or CaseIII)");
}

std::string to_string(InverseKind kind) {
    for (const auto& [k, name] : kInverseNames)
        if (k == kind) return std::string(name);
    return "?";
}

InverseKind parse_inverse_kind(std::string_view text) {
    for (const auto& [k, name] : kInverseNames)
        if (name == text) return k;
    throw InvalidArgument("unknown inverse kind '" + std::string(text) + "'");
}

}  // namespace starinv
