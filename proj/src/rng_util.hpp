#pragma once

#include <cstdint>
#include <random>

#include "neurocode/rational.hpp"

namespace neurocode::detail {

// Uniform draw in [0, bound) from raw engine words via rejection sampling.
// std::uniform_int_distribution is implementation-defined, which would break
// the cross-platform determinism the generators promise.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

// One coin flip with rational probability num/den in [0,1].
inline bool draw_bernoulli(std::mt19937_64& rng, const Rational& prob) {
    const std::uint64_t den = prob.get_den().get_ui();
    const std::uint64_t num = prob.get_num().get_ui();
    if (num == 0) return false;
    if (num >= den) return true;
    return draw_below(rng, den) < num;
}

}  // namespace neurocode::detail
