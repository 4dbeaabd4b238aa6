// starinv: generate, classify, invert, verify and export double star instances.
//
// Exit codes: 0 success / inverse exists, 3 inverse does not exist,
// 1 verification failure, 2 malformed input or usage error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "starinv/dot.hpp"
#include "starinv/generator.hpp"
#include "starinv/io.hpp"
#include "starinv/verify.hpp"

namespace {

using namespace starinv;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitAbsent = 3;

struct Output {
    std::string path;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw InvalidArgument("cannot open output file " + path);
        out << text;
    }
};

AnySpec load_spec(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidArgument("cannot read spec file " + path);
        buf << in.rdbuf();
    }
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    try {
        return any_spec_from_json(j);
    } catch (const Json::exception& e) {
        throw InvalidSpec(std::string("bad spec field: ") + e.what());
    }
}

template <typename S>
Json scalars_to_json(const StructuralScalars<S>& k) {
    return {{"s", to_string(k.s)},         {"t", to_string(k.t)},       {"u", to_string(k.u)},
            {"v", to_string(k.v)},         {"r", to_string(k.r)},       {"h", to_string(k.h)},
            {"p", to_string(k.p)},         {"q", to_string(k.q)},       {"zeta", to_string(k.zeta)},
            {"beta", to_string(k.beta)},   {"alpha", to_string(k.alpha)}, {"xty", to_string(k.xty)},
            {"ztw", to_string(k.ztw)}};
}

int cmd_gen(const std::string& case_name, std::uint64_t seed, const std::string& mode_name, Index max_size,
            const Output& out) {
    const CaseKind target = parse_case_kind(case_name);
    const FieldMode mode = parse_mode_name(mode_name);
    const GenBounds bounds{1, max_size};
    Json j;
    if (mode.base == FieldBase::Rationals) j = spec_to_json(generate<Rational>(target, seed, bounds));
    else if (mode.involution == Involution::Identity) j = spec_to_json(generate<GaussIdentity>(target, seed, bounds));
    else j = spec_to_json(generate<GaussConj>(target, seed, bounds));
    out.write(j.dump(2) + "\n");
    return kExitOk;
}

int cmd_classify(const std::string& path, const Output& out) {
    return std::visit(
        [&](const auto& spec) {
            const Json j{{"case", case_to_json(classify(spec))},
                         {"index", index_of(build(spec))},
                         {"scalars", scalars_to_json(scalars(spec))}};
            out.write(j.dump(2) + "\n");
            return kExitOk;
        },
        load_spec(path));
}

int cmd_invert(const std::string& path, const std::string& kind_name, const Output& out) {
    const InverseKind kind = parse_inverse_kind(kind_name);
    return std::visit(
        [&](const auto& spec) {
            const auto report = closed_form(spec, kind);
            out.write(report_to_json(report).dump(2) + "\n");
            return report.exists ? kExitOk : kExitAbsent;
        },
        load_spec(path));
}

int cmd_verify(const std::string& path, const Output& out) {
    return std::visit(
        [&](const auto& spec) {
            std::ostringstream os;
            bool failed = false;
            for (const auto& row : verify_all(spec)) {
                os << to_string(row.kind) << ' ' << to_string(row.verdict);
                if (!row.detail.empty()) os << "  " << row.detail;
                os << '\n';
                failed = failed || row.verdict == Verdict::Fail;
            }
            out.write(os.str());
            return failed ? kExitFail : kExitOk;
        },
        load_spec(path));
}

int cmd_table(const std::string& path, const Output& out) {
    return std::visit(
        [&](const auto& spec) {
            Json rows = Json::array();
            for (const auto& report : existence_table(spec)) {
                Json criteria = Json::array();
                for (const auto& c : report.criteria) {
                    criteria.push_back({{"name", c.name}, {"value", to_string(c.value)}, {"nonzero", !is_zero(c.value)}});
                }
                rows.push_back({{"kind", to_string(report.kind)}, {"exists", report.exists}, {"criteria", criteria}});
            }
            const Json j{{"case", case_to_json(classify(spec))}, {"rows", rows}};
            out.write(j.dump(2) + "\n");
            return kExitOk;
        },
        load_spec(path));
}

int cmd_export_dot(const std::string& path, const Output& out) {
    return std::visit(
        [&](const auto& spec) {
            out.write(to_dot(spec));
            return kExitOk;
        },
        load_spec(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized inverses of double star digraph matrices"};
    app.require_subcommand(1);

    Output out;
    std::string spec_path;
    std::string case_name;
    std::uint64_t seed = 0;
    std::string mode_name = "Rationals";
    Index max_size = 4;
    std::string kind_name;

    auto* gen = app.add_subcommand("gen", "Generate a random spec realizing a case");
    gen->add_option("--case", case_name, "GroupInvertible, CaseI, CaseII or CaseIII")->required();
    gen->add_option("--seed", seed, "RNG seed")->required();
    gen->add_option("--mode", mode_name, "Rationals, GaussianRationals or GaussianRationals/Conjugation");
    gen->add_option("--max-size", max_size, "Largest number of pendants per star")->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand("classify", "Print case, index and structural scalars");
    auto* invert = app.add_subcommand("invert", "Evaluate one closed-form inverse");
    invert->add_option("--kind", kind_name, "Drazin, Group, MoorePenrose, Core, DualCore, CoreEP, DualCoreEP, MPCEP, CEPMP, GDC, GC")
        ->required();
    auto* verify = app.add_subcommand("verify", "Check every closed form against axioms and oracles");
    auto* table = app.add_subcommand("table", "Existence summary (Case I and Case II only)");
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the weighted digraph");

    for (auto* sub : {classify_cmd, invert, verify, table, dot}) {
        sub->add_option("spec", spec_path, "Spec JSON file, or - for stdin")->required();
    }
    for (auto* sub : {gen, classify_cmd, invert, verify, table, dot}) {
        sub->add_option("-o,--out", out.path, "Write output here instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*gen) return cmd_gen(case_name, seed, mode_name, max_size, out);
        if (*classify_cmd) return cmd_classify(spec_path, out);
        if (*invert) return cmd_invert(spec_path, kind_name, out);
        if (*verify) return cmd_verify(spec_path, out);
        if (*table) return cmd_table(spec_path, out);
        if (*dot) return cmd_export_dot(spec_path, out);
    } catch (const Unsatisfiable& e) {
        std::cerr << "starinv: unsatisfiable: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const starinv::Error& e) {
        std::cerr << "starinv: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Json::exception& e) {
        std::cerr << "starinv: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
