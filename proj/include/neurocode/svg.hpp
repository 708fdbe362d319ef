#pragma once

#include <string>

#include "neurocode/interval.hpp"
#include "neurocode/simplex_realization.hpp"

namespace neurocode {

struct RenderSpec {
    int width = 640;
    int height = 0;  // 0 picks a height from the content
    int margin = 40;
};

/// One horizontal track per neuron on a shared x-scale. Closed endpoints are
/// filled discs, open endpoints hollow; infinite ends are clipped at the
/// frame with arrowheads. The only floating point in the library lives here,
/// at the final coordinate formatting; output is deterministic.
std::string render_svg_1d(const Realization1D& r, const RenderSpec& spec = {});

/// One panel per neuron showing its union of atoms (ambient dimension <= 2,
/// so at most three atoms exist): the origin dot, the half-open segment with
/// a hollow end at the origin, and the triangle with its bottom edge dashed
/// where the boundary is missing.
std::string render_svg_2d(const ConstructedRealization& r, const RenderSpec& spec = {});

}  // namespace neurocode
