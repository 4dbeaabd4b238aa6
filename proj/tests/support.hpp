// Shared fixtures: literal builders, the named example specs, random data.
#pragma once

#include <cstdint>
#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "starinv/doublestar.hpp"
#include "starinv/generator.hpp"

namespace fixtures {

using namespace starinv;

template <typename S>
Vector<S> vec(std::initializer_list<const char*> items) {
    Vector<S> out(static_cast<Index>(items.size()));
    Index i = 0;
    for (const char* t : items) out(i++) = parse_scalar<S>(t);
    return out;
}

template <typename S>
Matrix<S> mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    const auto r = static_cast<Index>(rows.size());
    const auto c = static_cast<Index>(rows.begin()->size());
    Matrix<S> out(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (const char* t : row) out(i, j++) = parse_scalar<S>(t);
        ++i;
    }
    return out;
}

template <typename S>
DoubleStarSpec<S> make(const char* a, const char* b, std::initializer_list<const char*> x,
                       std::initializer_list<const char*> y, std::initializer_list<const char*> z,
                       std::initializer_list<const char*> w) {
    return {parse_scalar<S>(a), parse_scalar<S>(b), vec<S>(x), vec<S>(y), vec<S>(z), vec<S>(w)};
}

// Case I, index 2.
template <typename S = Rational>
DoubleStarSpec<S> spec_a() { return make<S>("1", "1", {"1", "1"}, {"1", "-1"}, {"1", "1"}, {"1", "-1"}); }

// Case II, index 3.
template <typename S = Rational>
DoubleStarSpec<S> spec_b() { return make<S>("1", "1", {"1"}, {"1"}, {"1", "1"}, {"1", "-1"}); }

// Case III, nilpotent of index 5.
template <typename S = Rational>
DoubleStarSpec<S> spec_c() { return make<S>("1", "-1", {"1"}, {"1"}, {"1", "1"}, {"1", "-1"}); }

// Group invertible, in fact invertible.
template <typename S = Rational>
DoubleStarSpec<S> spec_d() { return make<S>("1", "1", {"1"}, {"1"}, {"1"}, {"1"}); }

// Case I over Q(i) with the identity involution and r = a^2 + w^T w = 0.
inline DoubleStarSpec<GaussIdentity> spec_f() {
    return make<GaussIdentity>("i", "1", {"1", "1"}, {"1", "-1"}, {"4", "-3"}, {"3/5", "4/5"});
}

/// Random dense matrix with entries from a small pool, some forced to zero.
template <typename S>
Matrix<S> random_matrix(std::mt19937_64& rng, Index rows, Index cols, int zero_percent = 40) {
    EntrySampler sampler(ScalarTraits<S>::mode, rng());
    Matrix<S> out(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            if (static_cast<int>(rng() % 100) < zero_percent) {
                out(i, j) = S(0);
            } else {
                auto [re, im] = sampler.draw();
                out(i, j) = ScalarTraits<S>::from_parts(re, im);
            }
        }
    return out;
}

/// Relabels pendants within each star; returns the relabeled spec and the
/// vertex permutation p with perm_similar(build(spec), p) == build(result).
template <typename S>
std::pair<DoubleStarSpec<S>, Permutation> relabel_pendants(const DoubleStarSpec<S>& spec, std::mt19937_64& rng) {
    const auto m = static_cast<std::size_t>(spec.m());
    const auto n = static_cast<std::size_t>(spec.n());
    std::vector<std::size_t> pu(m), pv(n);
    for (std::size_t i = 0; i < m; ++i) pu[i] = i;
    for (std::size_t j = 0; j < n; ++j) pv[j] = j;
    std::shuffle(pu.begin(), pu.end(), rng);
    std::shuffle(pv.begin(), pv.end(), rng);
    DoubleStarSpec<S> out = spec;
    for (std::size_t i = 0; i < m; ++i) {
        out.x(static_cast<Index>(i)) = spec.x(static_cast<Index>(pu[i]));
        out.y(static_cast<Index>(i)) = spec.y(static_cast<Index>(pu[i]));
    }
    for (std::size_t j = 0; j < n; ++j) {
        out.z(static_cast<Index>(j)) = spec.z(static_cast<Index>(pv[j]));
        out.w(static_cast<Index>(j)) = spec.w(static_cast<Index>(pv[j]));
    }
    std::vector<std::size_t> image(m + n + 2);
    image[0] = 0;
    for (std::size_t i = 0; i < m; ++i) image[1 + i] = 1 + pu[i];
    image[m + 1] = m + 1;
    for (std::size_t j = 0; j < n; ++j) image[m + 2 + j] = m + 2 + pv[j];
    return {out, Permutation(std::move(image))};
}

inline constexpr CaseKind kAllCases[] = {CaseKind::GroupInvertible, CaseKind::CaseI, CaseKind::CaseII, CaseKind::CaseIII};

}  // namespace fixtures
