// Acceptance run: one PASS/FAIL line per criterion, exact checks throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "starinv/doublestar.hpp"
#include "starinv/generator.hpp"
#include "starinv/oracle.hpp"
#include "support.hpp"

using namespace starinv;

namespace {

constexpr int kPerCase = 100;

template <typename S>
struct Entry {
    DoubleStarSpec<S> spec;
    CaseKind kind;
    Matrix<S> M;
    OracleSuite<S> oracle;
};

struct Pool {
    std::vector<Entry<Rational>> q;
    std::vector<Entry<GaussIdentity>> gi;
    std::vector<Entry<GaussConj>> gc;

    template <typename F>
    void each(F&& f) const {
        for (const auto& e : q) f(e);
        for (const auto& e : gi) f(e);
        for (const auto& e : gc) f(e);
    }
};

template <typename S>
Entry<S> entry(DoubleStarSpec<S> spec, CaseKind kind) {
    Matrix<S> M = build(spec);
    auto suite = oracle_suite(M);
    return {std::move(spec), kind, std::move(M), std::move(suite)};
}

// 100 specs per case, field modes taken in rotation.
Pool make_pool() {
    Pool pool;
    for (CaseKind c : fixtures::kAllCases) {
        for (int i = 0; i < kPerCase; ++i) {
            const auto seed = static_cast<std::uint64_t>(9000 + i);
            switch (i % 3) {
                case 0: pool.q.push_back(entry(generate<Rational>(c, seed), c)); break;
                case 1: pool.gi.push_back(entry(generate<GaussIdentity>(c, seed), c)); break;
                default: pool.gc.push_back(entry(generate<GaussConj>(c, seed), c)); break;
            }
        }
    }
    return pool;
}

class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        if (++failures_ <= 5) std::printf("    failed: %s\n", what.c_str());
    }
    bool ok() const { return failures_ == 0; }
    long checks() const { return checks_; }
    long failures() const { return failures_; }

private:
    long checks_ = 0;
    long failures_ = 0;
};

template <typename S>
std::string label(const Entry<S>& e) {
    return to_string(e.kind) + " m=" + std::to_string(e.spec.m()) + " n=" + std::to_string(e.spec.n()) + " " +
           to_string(ScalarTraits<S>::mode.involution);
}

template <typename S>
bool same(const OracleResult<S>& o, const InverseReport<S>& cf) {
    if (o.exists != cf.exists) return false;
    return !o.exists || equal(*o.value, *cf.value);
}

// ---- 1 ----------------------------------------------------------------------

void index_classification(const Pool& pool, Tally& t) {
    pool.each([&](const auto& e) {
        const std::size_t k = index_of(e.M);
        bool ok = false;
        switch (e.kind) {
            case CaseKind::GroupInvertible: ok = k <= 1; break;
            case CaseKind::CaseI: ok = k == 2; break;
            case CaseKind::CaseII: ok = k == 3; break;
            case CaseKind::CaseIII: ok = k == 5; break;
        }
        t.check(ok && classify(e.spec).kind == e.kind && e.spec.m() <= 4 && e.spec.n() <= 4,
                label(e) + " index " + std::to_string(k));
    });
}

// ---- 2 ----------------------------------------------------------------------

void drazin(const Pool& pool, Tally& t) {
    pool.each([&](const auto& e) {
        const auto cf = drazin_cf(e.spec);
        t.check(cf.exists && equal(*cf.value, e.oracle.drazin), label(e) + " drazin value");
        t.check(check_drazin(e.M, *cf.value, e.oracle.index).satisfied, label(e) + " drazin_cf axioms");
        t.check(check_drazin(e.M, e.oracle.drazin, e.oracle.index).satisfied, label(e) + " oracle axioms");
    });
}

// ---- 3 ----------------------------------------------------------------------

// Replaces one of x, y, z, w by an isotropic vector (v^T v = 0 under the identity involution).
std::optional<DoubleStarSpec<GaussIdentity>> isotropic(DoubleStarSpec<GaussIdentity> spec, int which) {
    Vector<GaussIdentity>& target = which == 0 ? spec.x : which == 1 ? spec.y : which == 2 ? spec.z : spec.w;
    const GaussIdentity i(Rational(0), Rational(1));
    const GaussIdentity c = target(0);
    switch (target.size()) {
        case 2: target << c, i * c; break;
        case 3: target << GaussIdentity(3) * c, GaussIdentity(4) * c, GaussIdentity(5) * i * c; break;
        case 4: target << c, i * c, target(2), i * target(2); break;
        default: return std::nullopt;
    }
    if (!violations(spec).empty()) return std::nullopt;
    return spec;
}

void moore_penrose(const Pool& pool, Tally& t) {
    auto one = [&](const auto& e) {
        const auto cf = mp_cf(e.spec);
        t.check(same(e.oracle.mp, cf), label(e) + " Moore-Penrose existence or value");
        if (cf.exists) t.check(check_penrose(e.M, *cf.value).satisfied, label(e) + " Penrose equations");
    };
    int plain = 0;
    pool.each([&](const auto& e) {
        if (plain++ % 4 == 0) one(e);
    });

    const char* names[] = {"s", "u", "t", "v"};
    int engineered = 0;
    GenBounds wide{2, 4};
    for (std::uint64_t seed = 0; engineered < 100; ++seed) {
        const int which = static_cast<int>(seed % 4);
        const CaseKind c = fixtures::kAllCases[(seed / 4) % 4];
        const auto spec = isotropic(generate<GaussIdentity>(c, 500 + seed, wide), which);
        if (!spec) continue;
        ++engineered;
        const auto e = entry(*spec, classify(*spec).kind);
        const auto k = scalars(e.spec);
        const GaussIdentity& zeroed = which == 0 ? k.s : which == 1 ? k.u : which == 2 ? k.t : k.v;
        t.check(is_zero(zeroed), std::string("engineered ") + names[which] + " is not zero");
        t.check(!e.oracle.mp.exists, std::string("engineered ") + names[which] + " = 0 but oracle finds an inverse");
        one(e);
    }
}

// ---- 4 ----------------------------------------------------------------------

void core_ep(const Pool& pool, Tally& t) {
    pool.each([&](const auto& e) {
        if (e.kind == CaseKind::CaseI || e.kind == CaseKind::CaseII) {
            const auto cf = core_ep_cf(e.spec);
            const auto dcf = dual_core_ep_cf(e.spec);
            t.check(same(e.oracle.core_ep, cf), label(e) + " core EP existence or value");
            t.check(same(e.oracle.dual_core_ep, dcf), label(e) + " dual core EP existence or value");
            // Independent rank test: A^cep exists iff rank((A^m)* A^m) = rank(A^m).
            const auto Am = mat_pow(e.M, e.oracle.index);
            t.check(cf.exists == (rank(Matrix<decltype(e.spec.a)>(star(Am) * Am)) == rank(Am)), label(e) + " core EP rank test");
            t.check(dcf.exists == (rank(Matrix<decltype(e.spec.a)>(Am * star(Am))) == rank(Am)), label(e) + " dual core EP rank test");
        } else if (e.kind == CaseKind::CaseIII) {
            const auto cf = core_ep_cf(e.spec);
            const auto dcf = dual_core_ep_cf(e.spec);
            t.check(cf.exists && is_zero(*cf.value) && dcf.exists && is_zero(*dcf.value), label(e) + " Case III not zero");
            t.check(check_core_ep(e.M, *cf.value, e.oracle.index, false).satisfied, label(e) + " Case III core EP axioms");
            t.check(check_core_ep(e.M, *dcf.value, e.oracle.index, true).satisfied, label(e) + " Case III dual axioms");
        }
    });

    const auto f = fixtures::spec_f();
    const auto e = entry(f, classify(f).kind);
    const auto cf = core_ep_cf(f);
    t.check(e.kind == CaseKind::CaseI && is_zero(scalars(f).r), "degenerate spec is not Case I with r = 0");
    t.check(!cf.exists && !e.oracle.core_ep.exists, "degenerate spec has a core EP inverse");
    t.check(same(e.oracle.dual_core_ep, dual_core_ep_cf(f)), "degenerate spec dual core EP");
}

// ---- 5 ----------------------------------------------------------------------

void composites(const Pool& pool, Tally& t) {
    pool.each([&](const auto& e) {
        using S = decltype(e.spec.a);
        const struct {
            InverseKind kind;
            CompositeKind ck;
            bool dual;
        } rows[] = {{InverseKind::MPCEP, CompositeKind::MPCEP, false},
                    {InverseKind::GDC, CompositeKind::GDC, false},
                    {InverseKind::CEPMP, CompositeKind::CEPMP, true},
                    {InverseKind::GC, CompositeKind::GC, true}};
        std::map<InverseKind, InverseReport<S>> got;
        for (const auto& row : rows) {
            const auto& cep = row.dual ? e.oracle.dual_core_ep : e.oracle.core_ep;
            const auto cf = closed_form(e.spec, row.kind);
            const auto composed = composite_from(e.M, row.ck, e.oracle.mp, cep);
            t.check(same(composed, cf), label(e) + " " + to_string(row.kind) + " existence or value");
            if (cf.exists && e.oracle.mp.exists && cep.exists) {
                t.check(check_composite(e.M, *cf.value, row.ck, CompositeAux<S>{*e.oracle.mp.value, *cep.value}).satisfied,
                        label(e) + " " + to_string(row.kind) + " axioms");
            }
            got.emplace(row.kind, cf);
        }
        if (e.kind != CaseKind::CaseI && e.kind != CaseKind::CaseII) return;
        const auto& a = got.at(InverseKind::MPCEP);
        const auto& b = got.at(InverseKind::CEPMP);
        if (a.exists && b.exists) t.check(!equal(*a.value, *b.value), label(e) + " MPCEP equals CEPMP");
        const auto& g = got.at(InverseKind::GDC);
        const auto& h = got.at(InverseKind::GC);
        if (g.exists && h.exists) t.check(!equal(*g.value, *h.value), label(e) + " GDC equals GC");
    });
}

// ---- 6 ----------------------------------------------------------------------

// Transcribed cell by cell, Case I then Case II.
const std::map<InverseKind, std::pair<std::vector<std::string>, std::vector<std::string>>> kTable = {
    {InverseKind::MoorePenrose, {{"s", "u", "t", "v"}, {"s", "u", "t", "v"}}},
    {InverseKind::CoreEP, {{"r", "h"}, {"h", "beta"}}},
    {InverseKind::DualCoreEP, {{"p", "q"}, {"q", "alpha"}}},
    {InverseKind::MPCEP, {{"s", "u", "t", "v", "r", "h"}, {"s", "u", "t", "v", "h", "beta"}}},
    {InverseKind::CEPMP, {{"s", "u", "t", "v", "p", "q"}, {"s", "u", "t", "v", "q", "alpha"}}},
    {InverseKind::GDC, {{"s", "u", "t", "v", "r", "h"}, {"s", "u", "t", "v", "h", "beta"}}},
    {InverseKind::GC, {{"s", "u", "t", "v", "p", "q"}, {"s", "u", "t", "v", "q", "alpha"}}},
};

void table(const Pool& pool, Tally& t) {
    for (CaseKind c : {CaseKind::CaseI, CaseKind::CaseII}) {
        for (const auto& [kind, cells] : kTable) {
            const auto& want = c == CaseKind::CaseI ? cells.first : cells.second;
            std::vector<std::string> have;
            for (const auto& cr : detail::required(scalars(fixtures::spec_a()), detail::criterion_names(kind, c)))
                have.push_back(cr.name);
            t.check(have == want, to_string(c) + " " + to_string(kind) + " criteria differ");
        }
    }

    pool.each([&](const auto& e) {
        if (e.kind != CaseKind::CaseI && e.kind != CaseKind::CaseII) return;
        const auto rows = existence_table(e.spec);
        t.check(rows.size() == kTable.size(), label(e) + " table row count");
        for (const auto& row : rows) {
            const auto& cells = kTable.at(row.kind);
            const auto& want = e.kind == CaseKind::CaseI ? cells.first : cells.second;
            std::vector<std::string> have;
            bool all_nonzero = true;
            for (const auto& cr : row.criteria) {
                have.push_back(cr.name);
                all_nonzero = all_nonzero && !is_zero(cr.value);
            }
            t.check(have == want, label(e) + " " + to_string(row.kind) + " row criteria");
            t.check(row.exists == all_nonzero, label(e) + " " + to_string(row.kind) + " verdict vs criteria");

            bool independent = false;
            switch (row.kind) {
                case InverseKind::MoorePenrose: independent = e.oracle.mp.exists; break;
                case InverseKind::CoreEP: independent = e.oracle.core_ep.exists; break;
                case InverseKind::DualCoreEP: independent = e.oracle.dual_core_ep.exists; break;
                case InverseKind::MPCEP:
                case InverseKind::GDC: independent = e.oracle.mp.exists && e.oracle.core_ep.exists; break;
                default: independent = e.oracle.mp.exists && e.oracle.dual_core_ep.exists; break;
            }
            t.check(row.exists == independent, label(e) + " " + to_string(row.kind) + " verdict vs oracle");
        }
    });
}

// ---- 7 ----------------------------------------------------------------------

template <typename S>
std::vector<bool> verdicts(const DoubleStarSpec<S>& spec) {
    std::vector<bool> out;
    for (InverseKind kind : kAllInverseKinds) out.push_back(closed_form(spec, kind).exists);
    return out;
}

void invariance(const Pool& pool, Tally& t) {
    std::mt19937_64 rng(77);
    int n = 0;
    pool.each([&](const auto& e) {
        if (n++ % 4 != 0) return;
        const auto base = verdicts(e.spec);
        const CaseLabel where = classify(e.spec);
        for (int r = 0; r < 20; ++r) {
            const auto [moved, p] = fixtures::relabel_pendants(e.spec, rng);
            t.check(equal(perm_similar(e.M, p), build(moved)), label(e) + " relabeling is not a similarity");
            t.check(classify(moved) == where, label(e) + " classification moved under relabeling");
            t.check(verdicts(moved) == base, label(e) + " verdicts moved under relabeling");
        }
        const auto mir = mirror(e.spec);
        t.check(equal(perm_similar(e.M, mir.perm), build(mir.spec)), label(e) + " mirror is not a similarity");
        t.check(classify(mir.spec).kind == where.kind, label(e) + " classification moved under mirror");
        t.check(verdicts(mir.spec) == base, label(e) + " verdicts moved under mirror");
        t.check(index_of(build(mir.spec)) == e.oracle.index, label(e) + " index moved under mirror");
    });
}

// ---- 8 ----------------------------------------------------------------------

void counterexample(const Pool&, Tally& t) {
    // Any X = [p q] has AXA = A and (AX)* = AX only if p + iq = 1 and q = ip, i.e. 0 = 1.
    const auto A = fixtures::mat<GaussIdentity>({{"1"}, {"i"}});
    t.check(is_zero(Matrix<GaussIdentity>(star(A) * A)), "A*A is not zero");
    t.check(rank(Matrix<GaussIdentity>(star(A) * A)) != rank(A), "rank(A*A) equals rank(A)");
    t.check(!one_three_oracle(A).exists, "(1,3)-inverse found");
    t.check(!moore_penrose_oracle(A).exists, "Moore-Penrose inverse found");
    const auto B = fixtures::mat<GaussConj>({{"1"}, {"i"}});
    t.check(moore_penrose_oracle(B).exists, "conjugation control has no Moore-Penrose inverse");
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const Pool pool = make_pool();
    std::printf("pool: %d specs per case, built in %.1f s\n", kPerCase,
                std::chrono::duration<double>(Clock::now() - start).count());

    const std::vector<std::pair<const char*, std::function<void(const Pool&, Tally&)>>> criteria = {
        {"index classification by case", index_classification},
        {"Drazin closed forms match the oracle", drazin},
        {"Moore-Penrose existence and values", moore_penrose},
        {"core EP and dual core EP", core_ep},
        {"composite inverses", composites},
        {"existence table", table},
        {"invariance under relabeling and mirror", invariance},
        {"[1; i] counterexample", counterexample},
    };

    int failed = 0;
    int number = 0;
    for (const auto& [name, run] : criteria) {
        ++number;
        Tally t;
        const auto t0 = Clock::now();
        try {
            run(pool, t);
        } catch (const std::exception& ex) {
            t.check(false, std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (number == 1) t.check(secs < 10.0, "index classification took " + std::to_string(secs) + " s");
        std::printf("%s %d %s (%ld checks, %ld failed, %.2f s)\n", t.ok() ? "PASS" : "FAIL", number, name, t.checks(),
                    t.failures(), secs);
        if (!t.ok()) ++failed;
    }
    std::printf("total %.1f s\n", std::chrono::duration<double>(Clock::now() - start).count());
    return failed == 0 ? 0 : 1;
}
