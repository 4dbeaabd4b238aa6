// Seeded random double star specs realizing a requested case.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "starinv/doublestar.hpp"

namespace starinv {

struct GenBounds {
    Index min_size = 1;
    Index max_size = 4;
};

inline constexpr int kMaxDraws = 10000;

/// Draws entries from {+-1, +-2, +-1/2, +-i, +-1+-i}, keeping only those in the field.
/// Uses plain modulo reduction so that output is identical across standard libraries.
class EntrySampler {
public:
    EntrySampler(FieldMode mode, std::uint64_t seed);

    std::pair<Rational, Rational> draw();
    Index size_in(Index lo, Index hi);
    bool coin();

private:
    std::mt19937_64 rng_;
    std::vector<std::pair<Rational, Rational>> pool_;
};

namespace detail {

// Forces sum_i l_i r_i = 0 by solving for the last entry of r.
template <typename S>
void solve_last(const Vector<S>& l, Vector<S>& r) {
    const Index k = l.size() - 1;
    S partial(0);
    for (Index i = 0; i < k; ++i) partial += l(i) * r(i);
    r(k) = -partial / l(k);
}

}  // namespace detail

template <typename S>
DoubleStarSpec<S> generate(CaseKind target, std::uint64_t seed, GenBounds bounds = {}) {
    if (bounds.min_size < 1 || bounds.max_size < bounds.min_size) {
        throw InvalidArgument("size bounds must satisfy 1 <= min <= max");
    }
    EntrySampler rng(ScalarTraits<S>::mode, seed);
    auto draw = [&rng] {
        auto [re, im] = rng.draw();
        return ScalarTraits<S>::from_parts(std::move(re), std::move(im));
    };
    auto draw_vec = [&draw](Index len) {
        Vector<S> out(len);
        for (Index i = 0; i < len; ++i) out(i) = draw();
        return out;
    };
    for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
        const Index m = rng.size_in(bounds.min_size, bounds.max_size);
        const Index n = rng.size_in(bounds.min_size, bounds.max_size);
        DoubleStarSpec<S> spec{draw(), draw(), draw_vec(m), draw_vec(m), draw_vec(n), draw_vec(n)};
        switch (target) {
            case CaseKind::GroupInvertible: break;
            case CaseKind::CaseI:
                detail::solve_last(spec.x, spec.y);
                detail::solve_last(spec.z, spec.w);
                break;
            case CaseKind::CaseII:
                detail::solve_last(spec.z, spec.w);
                break;
            case CaseKind::CaseIII: {
                detail::solve_last(spec.z, spec.w);
                const S xty = scalars(spec).xty;
                if (is_zero(xty)) continue;
                spec.b = -xty / spec.a;
                break;
            }
        }
        if (!violations(spec).empty()) continue;
        if (classify(spec).kind != target) continue;
        const bool flip = (target == CaseKind::CaseII || target == CaseKind::CaseIII) && rng.coin();
        return flip ? mirror(spec).spec : spec;
    }
    throw Unsatisfiable("could not realize " + to_string(target) + " within " + std::to_string(kMaxDraws) +
                        " draws (sizes " + std::to_string(bounds.min_size) + ".." + std::to_string(bounds.max_size) + ")");
}

}  // namespace starinv
