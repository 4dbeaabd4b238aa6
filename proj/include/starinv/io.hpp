// JSON encoding of scalars, matrices, specs and inverse reports.
#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "starinv/doublestar.hpp"

namespace starinv {

using Json = nlohmann::json;

inline Json mode_to_json(FieldMode mode) {
    return {{"base", to_string(mode.base)}, {"involution", to_string(mode.involution)}};
}

inline FieldMode mode_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("mode must be an object with base and involution");
    FieldMode mode;
    mode.base = parse_field_base(j.at("base").get<std::string>());
    mode.involution = j.contains("involution") ? parse_involution(j.at("involution").get<std::string>())
                                               : Involution::Identity;
    validate(mode);
    return mode;
}

/// "Rationals", "GaussianRationals" (identity involution) or "GaussianRationals/Conjugation".
inline FieldMode parse_mode_name(std::string_view text) {
    if (text == "Rationals") return {FieldBase::Rationals, Involution::Identity};
    if (text == "GaussianRationals" || text == "GaussianRationals/Identity") {
        return {FieldBase::GaussianRationals, Involution::Identity};
    }
    if (text == "GaussianRationals/Conjugation") return {FieldBase::GaussianRationals, Involution::Conjugation};
    throw InvalidArgument("unknown mode '" + std::string(text) +
                          "' (expected Rationals, GaussianRationals[/Identity] or GaussianRationals/Conjugation)");
}

template <typename S>
S scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar<S>(j.get<std::string>());
    if (j.is_number_integer()) return S(Rational(j.get<long>()));
    throw InvalidArgument("scalar must be a string like \"p/q\" or \"p/q+r/s*i\", got " + j.dump());
}

template <typename S>
Json matrix_to_json(const Matrix<S>& A) {
    Json rows = Json::array();
    for (Index i = 0; i < A.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < A.cols(); ++j) row.push_back(to_string(A(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", A.rows()}, {"cols", A.cols()}, {"mode", mode_to_json(ScalarTraits<S>::mode)}, {"entries", rows}};
}

template <typename S>
Matrix<S> matrix_from_json(const Json& j) {
    const FieldMode mode = mode_from_json(j.at("mode"));
    if (!(mode == ScalarTraits<S>::mode)) throw InvalidArgument("matrix mode does not match the requested field");
    const auto rows = j.at("rows").get<Index>();
    const auto cols = j.at("cols").get<Index>();
    const Json& entries = j.at("entries");
    if (rows < 0 || cols < 0 || !entries.is_array() || static_cast<Index>(entries.size()) != rows) {
        throw DimensionMismatch("matrix entries do not match rows");
    }
    Matrix<S> A(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const Json& row = entries.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw DimensionMismatch("matrix row has the wrong length");
        for (Index c = 0; c < cols; ++c) A(i, c) = scalar_from_json<S>(row.at(static_cast<std::size_t>(c)));
    }
    return A;
}

template <typename S>
Json spec_to_json(const DoubleStarSpec<S>& spec) {
    auto vec = [](const Vector<S>& v) {
        Json out = Json::array();
        for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
        return out;
    };
    return {{"mode", mode_to_json(ScalarTraits<S>::mode)},
            {"m", spec.m()},
            {"n", spec.n()},
            {"a", to_string(spec.a)},
            {"b", to_string(spec.b)},
            {"x", vec(spec.x)},
            {"y", vec(spec.y)},
            {"z", vec(spec.z)},
            {"w", vec(spec.w)}};
}

/// Parses and validates; the mode field is ignored here (see any_spec_from_json).
template <typename S>
DoubleStarSpec<S> spec_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidSpec("spec must be a JSON object");
    auto vec = [&j](const char* key, Index expected, const char* dim) {
        if (!j.contains(key) || !j.at(key).is_array()) throw InvalidSpec(std::string(key) + " must be an array");
        const Json& arr = j.at(key);
        if (static_cast<Index>(arr.size()) != expected) {
            throw InvalidSpec(std::string(key) + " must have length " + dim + " = " + std::to_string(expected));
        }
        Vector<S> out(expected);
        for (Index i = 0; i < expected; ++i) out(i) = scalar_from_json<S>(arr.at(static_cast<std::size_t>(i)));
        return out;
    };
    for (const char* key : {"m", "n", "a", "b"}) {
        if (!j.contains(key)) throw InvalidSpec(std::string("missing field ") + key);
    }
    if (!j.at("m").is_number_integer() || !j.at("n").is_number_integer()) throw InvalidSpec("m and n must be integers");
    const auto m = j.at("m").get<Index>();
    const auto n = j.at("n").get<Index>();
    if (m < 1) throw InvalidSpec("m must be at least 1");
    if (n < 1) throw InvalidSpec("n must be at least 1");
    DoubleStarSpec<S> spec{scalar_from_json<S>(j.at("a")), scalar_from_json<S>(j.at("b")),
                           vec("x", m, "m"), vec("y", m, "m"), vec("z", n, "n"), vec("w", n, "n")};
    validate(spec);
    return spec;
}

using AnySpec = std::variant<DoubleStarSpec<Rational>, DoubleStarSpec<GaussIdentity>, DoubleStarSpec<GaussConj>>;

inline AnySpec any_spec_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidSpec("spec must be a JSON object");
    const FieldMode mode = j.contains("mode") ? mode_from_json(j.at("mode")) : FieldMode{};
    if (mode.base == FieldBase::Rationals) return spec_from_json<Rational>(j);
    if (mode.involution == Involution::Identity) return spec_from_json<GaussIdentity>(j);
    return spec_from_json<GaussConj>(j);
}

inline Json case_to_json(const CaseLabel& label) {
    return {{"kind", to_string(label.kind)}, {"orientation", to_string(label.orientation)}};
}

template <typename S>
Json report_to_json(const InverseReport<S>& report) {
    Json criteria = Json::array();
    for (const auto& c : report.criteria) {
        criteria.push_back({{"name", c.name}, {"value", to_string(c.value)}, {"nonzero", !is_zero(c.value)},
                            {"required", c.required_nonzero}});
    }
    return {{"kind", to_string(report.kind)},
            {"exists", report.exists},
            {"case", case_to_json(report.case_label)},
            {"criteria", criteria},
            {"matrix", report.value ? matrix_to_json(*report.value) : Json(nullptr)}};
}

}  // namespace starinv
