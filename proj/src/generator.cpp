#include "starinv/generator.hpp"

namespace starinv {

EntrySampler::EntrySampler(FieldMode mode, std::uint64_t seed) : rng_(seed) {
    validate(mode);
    for (int sign : {1, -1}) {
        pool_.emplace_back(Rational(sign), Rational(0));
        pool_.emplace_back(Rational(2 * sign), Rational(0));
        pool_.emplace_back(Rational(sign, 2), Rational(0));
    }
    if (mode.base == FieldBase::GaussianRationals) {
        for (int sign : {1, -1}) pool_.emplace_back(Rational(0), Rational(sign));
        for (int re : {1, -1})
            for (int im : {1, -1}) pool_.emplace_back(Rational(re), Rational(im));
    }
}

std::pair<Rational, Rational> EntrySampler::draw() {
    return pool_[static_cast<std::size_t>(rng_() % pool_.size())];
}

Index EntrySampler::size_in(Index lo, Index hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<Index>(rng_() % span);
}

bool EntrySampler::coin() {
    return (rng_() & 1U) != 0;
}

}  // namespace starinv
